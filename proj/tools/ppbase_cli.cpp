#include <iostream>

int main() {
    std::cout << "ppbase CLI placeholder\n";
    return 0;
}
