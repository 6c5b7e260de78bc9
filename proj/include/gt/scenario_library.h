#ifndef GT_SCENARIO_LIBRARY_H_
#define GT_SCENARIO_LIBRARY_H_

#include <string>
#include <string_view>
#include <vector>

#include "gt/game_file.h"

namespace gt::io {

// Names of the built-in scenarios, in library order.
std::vector<std::string> scenario_names();

// Throws kInvalidArgument for an unknown name.
GameFile builtin_scenario(std::string_view name);

}  // namespace gt::io

#endif  // GT_SCENARIO_LIBRARY_H_
