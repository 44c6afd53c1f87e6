#include "mcloc/cli.hpp"
#include <iostream>

int main(int argc, char** argv) { return mcloc::cliMain(argc, argv, std::cout, std::cerr); }
