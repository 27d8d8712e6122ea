class ForContinue {
    int odd(int n) {
        int s = 0;
        for (int i = 0; i < n; i++) {
            if (i % 2 == 0) {
                continue;
            }
            s += i;
        }
        return s;
    }
}
