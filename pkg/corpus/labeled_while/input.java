class LabeledWhile {
    void f(int a) {
        int x = a;
        loop:
        while (x > 0) {
            while (x > 10) {
                x -= 3;
                if (x == 20) {
                    break loop;
                }
            }
            x--;
            if (x == 5) {
                continue loop;
            }
            g(x);
        }
    }
}
