#include "bubblegrid/cli.hpp"

int main(int argc, char** argv) { return bubblegrid::cli::run(argc, argv); }
