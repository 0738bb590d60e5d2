#include <qmock/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
    return qmock::cli::run(argc, argv, std::cout, std::cerr);
}
