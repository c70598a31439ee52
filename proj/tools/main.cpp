#include <iostream>

int main() {
    std::cout << "extracta: not yet wired\n";
    return 0;
}
