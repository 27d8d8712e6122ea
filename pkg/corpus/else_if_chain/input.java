class ElseIfChain {
    int sign(int a, int b) {
        int r;
        if (a < b) {
            r = -1;
        } else if (a > b) {
            r = 1;
        } else {
            r = 0;
        }
        return r;
    }
}
