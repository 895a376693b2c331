#include <stdio.h>
#include "gdiff.h"

int main(void) {
    GdiffGraph *g = NULL, *r = NULL;
    if (gdiff_graph_family("wheel:6", &g) != GDIFF_STATUS_OK) {
        fprintf(stderr, "%s\n", gdiff_last_error_message());
        return 1;
    }
    int64_t value = 0;
    uint64_t witness = 0;
    gdiff_differential_of_r(g, 10000000, &value, &witness);
    printf("diff(R(W_6)) = %lld, witness mask 0x%llx\n", (long long)value, (unsigned long long)witness);
    gdiff_graph_roperator(g, &r);
    char *g6 = NULL;
    gdiff_graph_to_graph6(r, &g6);
    printf("R(W_6) = %s (%zu vertices)\n", g6, gdiff_graph_order(r));
    gdiff_string_free(g6);
    GdiffGraph *bad = NULL;
    GdiffStatus st = gdiff_graph_from_graph6("Bx", &bad);
    printf("bad graph6 -> status %d: %s\n", (int)st, gdiff_last_error_message());
    gdiff_graph_free(r);
    gdiff_graph_free(g);
    return 0;
}
