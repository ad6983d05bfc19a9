#include <iostream>

#include "bookx/cli.hpp"

int main(int argc, char** argv) { return bookx::dispatch(argc, argv, std::cout, std::cerr); }
