#include <radspec/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
    return radspec::cli::run(argc, argv, std::cout, std::cerr);
}
