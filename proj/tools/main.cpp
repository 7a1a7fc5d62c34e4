#include "mgp/cli.hpp"

int main(int argc, char **argv) { return mgp::cli_main(argc, argv); }
