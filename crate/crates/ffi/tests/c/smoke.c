#include <stdio.h>
#include <string.h>

#include "short_links.h"

int main(void) {
    SlComplex *k = NULL;
    if (sl_complex_build_kp("1|2,3", &k) != SL_STATUS_OK) {
        fprintf(stderr, "%s\n", sl_last_error());
        return 1;
    }
    size_t facets = 0;
    sl_complex_counts(k, NULL, NULL, &facets);
    printf("facets %zu\n", facets);

    char *cls = NULL;
    if (sl_complex_classify(k, &cls) != SL_STATUS_OK) {
        fprintf(stderr, "%s\n", sl_last_error());
        return 1;
    }
    printf("class %s\n", cls);
    sl_string_free(cls);
    sl_complex_free(k);

    SlComplex *bad = NULL;
    SlStatus status = sl_complex_parse("simplicial 2\n1 2\n", &bad);
    printf("status %d\n", (int)status);
    if (strlen(sl_last_error()) == 0) {
        return 1;
    }
    return 0;
}
