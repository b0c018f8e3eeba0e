#pragma once

namespace latsum {

// Entry point behind main(). Exit codes: 0 success, 2 usage or domain
// error, 3 numerical failure, 4 validation failure.
int run_cli(int argc, char** argv);

} // namespace latsum
