#include "app.hpp"

#include <iostream>

int main(int argc, char** argv) { return tiltwall::app::run(argc, argv, std::cout, std::cerr); }
