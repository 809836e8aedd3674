#include "ptchain/cli.hpp"

int main(int argc, char** argv) { return ptchain::cli::run(argc, argv); }
