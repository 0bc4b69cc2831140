#include <iostream>
#include <vector>

int main(int, char**) {
    std::cerr << "cli not wired up yet\n";
    return 2;
}
