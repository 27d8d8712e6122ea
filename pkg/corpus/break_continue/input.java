class BreakContinue {
    int f(int n) {
        int s = 0;
        int i = 0;
        while (i < n) {
            i++;
            if (i == 3) {
                continue;
            }
            if (s > 100) {
                break;
            }
            s = s + i;
        }
        return s;
    }
}
