// Placeholder main; the CLI is wired up once the library surface is complete.
int main() { return 0; }
