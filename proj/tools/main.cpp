#include <iostream>

int main() {
    std::cout << "thinshell cli placeholder\n";
    return 0;
}
