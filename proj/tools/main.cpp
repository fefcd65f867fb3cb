#include "cli.hpp"

int main(int argc, char** argv) { return adr::cli::run_main(argc, argv); }
