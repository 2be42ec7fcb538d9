#include "cli/commands.hpp"

int main(int argc, char** argv) { return parcomp::cli::run(argc, argv); }
