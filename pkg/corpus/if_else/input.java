class IfElse {
    int f(int a) {
        int r = 0;
        if (a > 0) {
            r = 1;
        } else {
            r = 2;
        }
        return r;
    }
}
