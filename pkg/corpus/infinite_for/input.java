class InfiniteFor {
    int halve(int n) {
        int k = n;
        for (;;) {
            k = k / 2;
            if (k < 1) {
                return k;
            }
        }
    }
}
