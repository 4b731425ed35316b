#include <stdio.h>
#include <string.h>
#include "aflt.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (%s)\n", #cond, aflt_last_error()); return 1; } } while (0)

int main(void) {
    AfltField *field = NULL;
    CHECK(aflt_field_new("quadratic", -5, &field) == AFLT_STATUS_OK);
    CHECK(aflt_field_degree(field) == 2);

    uint64_t h = 0;
    CHECK(aflt_class_number(field, &h) == AFLT_STATUS_OK && h == 2);

    char *json = NULL;
    CHECK(aflt_check(field, NULL, false, 0, "json", &json) == AFLT_STATUS_OK);
    CHECK(strstr(json, "\"verdict\": \"HOLDS\"") != NULL);
    aflt_string_free(json);

    CHECK(aflt_check(field, NULL, false, 0, "xml", &json) == AFLT_STATUS_PARSE);
    CHECK(strstr(aflt_last_error(), "xml") != NULL);
    aflt_field_free(field);

    AfltField *bad = NULL;
    CHECK(aflt_field_new("quadratic", 12, &bad) == AFLT_STATUS_UNSUPPORTED_FIELD);
    CHECK(bad == NULL);
    puts("ok");
    return 0;
}
