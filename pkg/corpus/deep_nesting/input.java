class DeepNesting {
    int f(int a) {
        int d = 0;
        for (int i = 0; i < a; i++) {
            while (d < i) {
                if (d % 2 == 0) {
                    for (int j = 0; j < d; j++) {
                        if (j == 3) {
                            break;
                        }
                        d += j;
                    }
                } else {
                    d++;
                }
            }
        }
        return d;
    }
}
