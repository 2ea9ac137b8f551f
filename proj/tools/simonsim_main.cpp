#include "simonsim/commands.hpp"

#include <iostream>

int main(int argc, char **argv) {
    return simonsim::cli::run(argc, argv, std::cout, std::cerr);
}
