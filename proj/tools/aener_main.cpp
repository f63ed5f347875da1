#include "aener/cli.hpp"

int main(int argc, char** argv) { return aener::cli::run(argc, argv); }
