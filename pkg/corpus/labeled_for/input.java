class LabeledFor {
    int f(int n) {
        int c = 0;
        outer:
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < n; j++) {
                if (j > i) {
                    continue outer;
                }
                if (c > 50) {
                    break outer;
                }
                c++;
            }
        }
        return c;
    }
}
