// Acceptance suite: one summary line per criterion, nonzero exit on failure.
// Populated as the library modules land.

int main() { return 0; }
