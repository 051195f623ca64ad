#include "dhopf/acceptance.hpp"

#include <iostream>

int main() { return dhopf::acceptance::run_all(std::cout) ? 0 : 1; }
