#include <iostream>

#include "pochhammer/cli.hpp"

int main(int argc, char** argv) {
    return pochhammer::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
