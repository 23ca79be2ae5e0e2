#include <cstdio>

int main() {
  std::puts("orbitmc placeholder");
  return 0;
}
