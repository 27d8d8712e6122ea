class ForPartial {
    int f(int n) {
        int i = 0;
        for (; i < n; ) {
            i += 2;
        }
        for (int k = 0; ; k++) {
            if (k > n) {
                break;
            }
        }
        return i;
    }
}
