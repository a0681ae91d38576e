#include <iostream>

#include "chainrad/cli.hpp"

int main(int argc, char** argv) { return chainrad::cli::main_entry(argc, argv, std::cout, std::cerr); }
