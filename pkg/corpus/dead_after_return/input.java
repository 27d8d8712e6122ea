class DeadAfterReturn {
    int f(int a) {
        if (a > 0) {
            return 1;
        } else {
            return 2;
        }
        a = 5;
        return a;
    }
}
