#include <iostream>

int main() {
    std::cout << "bench placeholder\n";
    return 0;
}
