class WideBranches {
    int f(int a) {
        int w = 0;
        if (a == 1) {
            w = 10;
        }
        if (a == 2) {
            w = 20;
        }
        if (a == 3) {
            w = 30;
        }
        if (a == 4) {
            w = 40;
        } else {
            w = 41;
        }
        g(w);
        return w;
    }
}
