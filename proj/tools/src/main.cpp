#include <iostream>

#include "semicount_cli/commands.hpp"

int main(int argc, char** argv) { return semicount::cli::main_entry(argc, argv, std::cout, std::cerr); }
