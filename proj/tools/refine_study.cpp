#include <iostream>
int main() { std::cout << "refine study placeholder\n"; }
