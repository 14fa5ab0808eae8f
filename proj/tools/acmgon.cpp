#include <iostream>

#include <acmgon/cli.hpp>

int main(int argc, char** argv) { return acm::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
