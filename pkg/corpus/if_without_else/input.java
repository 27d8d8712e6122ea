class IfWithoutElse {
    int abs(int a) {
        int r = a;
        if (r < 0) {
            r = -r;
        }
        return r;
    }
}
