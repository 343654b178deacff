#include <stdio.h>
#include <string.h>

#include "sturmian.h"

static int check(int ok, const char *what) {
    if (!ok) {
        fprintf(stderr, "failed: %s\n", what);
    }
    return ok ? 0 : 1;
}

int main(void) {
    int failures = 0;
    SturmianWord *w = NULL;
    char *s = NULL;

    failures += check(sturmian_christoffel(5, 2, &w) == STURMIAN_STATUS_OK, "christoffel status");
    failures += check(sturmian_word_to_string(w, &s) == STURMIAN_STATUS_OK, "to_string status");
    failures += check(strcmp(s, "aaabaab") == 0, "christoffel value");
    sturmian_string_free(s);

    SturmianWord *u = NULL, *v = NULL;
    sturmian_word_parse("abaab", &u);
    sturmian_word_parse("aba", &v);
    bool basis = false;
    failures += check(sturmian_is_basis(u, v, &basis) == STURMIAN_STATUS_OK && basis, "basis");

    SturmianWord *x = NULL;
    failures += check(sturmian_word_parse("abc", &x) == STURMIAN_STATUS_PARSE, "parse error");
    failures += check(sturmian_last_error_message() != NULL, "error message");

    SturmianBraid *b = NULL, *e = NULL;
    sturmian_braid_parse("1 2 3 1 2 3 1 2 3 1 2 3", &b);
    sturmian_braid_parse("", &e);
    bool equal = false;
    failures += check(sturmian_braid_equal(b, e, true, &equal) == STURMIAN_STATUS_OK && equal, "center");

    sturmian_word_free(w);
    sturmian_word_free(u);
    sturmian_word_free(v);
    sturmian_braid_free(b);
    sturmian_braid_free(e);
    if (failures == 0) {
        printf("ok\n");
    }
    return failures;
}
