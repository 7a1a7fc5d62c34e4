#pragma once

namespace mgp {

/// Entry point of the command line tool. Exit codes: 0 success, 1 usage,
/// 2 I/O failure, 3 when the produced partition misses the balance bound.
int cli_main(int argc, char **argv);

} // namespace mgp
