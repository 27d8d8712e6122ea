class Verdicts {
    int f(int a) {
        int x = 0;
        x = a;
        if (x > 3) {
            x = a;
        }
        return x;
    }
}
