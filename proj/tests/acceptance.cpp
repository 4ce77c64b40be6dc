#include "qhall/verify.hpp"
int main() { return 0; }
