#include <cstdio>
int main() { std::puts("redmat (work in progress)"); return 0; }
