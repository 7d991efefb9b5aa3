#include "emlab/cli.hpp"

int main(int argc, char** argv) { return emlab::cli::run(argc, argv); }
