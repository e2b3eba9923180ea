#include "swipt/cli.hpp"

int main(int argc, char** argv) { return swipt::cli::main_entry(argc, argv); }
