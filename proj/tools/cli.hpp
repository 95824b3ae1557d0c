#pragma once

namespace aquanim {

// Entry point of the `aquanim` command line tool.
// Exit codes: 0 success, 1 usage or input error, 2 invariant failure.
int cli_main(int argc, const char* const* argv);

}  // namespace aquanim
