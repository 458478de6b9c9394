#include <cstdio>
int main() { std::puts("lssc placeholder"); return 0; }
