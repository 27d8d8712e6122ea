class VoidReturn {
    void f(int a) {
        if (a < 0) {
            return;
        }
        g(a);
    }
}
