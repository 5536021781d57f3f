#include <iostream>

#include "bregex/acceptance.hpp"

int main() {
    auto results = bregex::acceptance::run_all(std::cout);
    return bregex::acceptance::all_passed(results) ? 0 : 1;
}
