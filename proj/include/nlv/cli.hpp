#pragma once

// Command-line entry point, callable in-process for tests.
// Verbs: run <config>, fringes <config>, modes, check.
// Exit codes: 0 success, 1 runtime failure, 2 configuration, 3 input/output.

namespace nlv {

int cli_main(int argc, const char* const* argv);

} // namespace nlv
