#include "fixinv/cli_io.hpp"

int main(int argc, char** argv) { return fixinv::run_cli(argc, argv); }
