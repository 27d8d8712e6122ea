class Operators {
    void f(int a, int b) {
        boolean done = false;
        int t = 0;
        while (!done && (a != b || t <= 3)) {
            ++t;
            --a;
            b--;
            t *= 2;
            t /= 3;
            t %= 7;
            t -= 1;
            done = t >= 4;
            System.out.println(t);
        }
    }
}
