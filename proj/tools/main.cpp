#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return betticone::cli::main_entry(argc, argv, std::cout, std::cerr);
}
