class WhileLoop {
    void count(int n) {
        int i = 0;
        while (i < n) {
            i++;
        }
        g(i);
    }
}
