#include <iostream>

#include "mlcp/cli.hpp"

int main(int argc, char** argv) { return mlcp::cli::run(argc, argv, std::cout, std::cerr); }
