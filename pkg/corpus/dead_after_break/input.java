class DeadAfterBreak {
    void f(int a) {
        while (a < 10) {
            a++;
            break;
            g(a);
        }
        h(a);
    }
}
