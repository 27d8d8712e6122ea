class EmptyBlocks {
    int f(int a) {
        {
        }
        ;
        if (a > 1) {
        } else {
            a = 2;
        }
        while (a < 0) {
            ;
            a++;
        }
        {
            {
                a = a * 3;
            }
        }
        if (a == 9) {
        }
        return a;
    }
}
