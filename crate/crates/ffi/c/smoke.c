#include <stdio.h>
#include <string.h>

#include "ellsurf.h"

int main(void) {
    EllsurfSurface *s = NULL;
    if (ellsurf_surface_new("0", "-t^2", &s) != ELLSURF_STATUS_OK) {
        fprintf(stderr, "surface: %s\n", ellsurf_last_error_message());
        return 1;
    }
    uint64_t euler = 0;
    bool good = false;
    ellsurf_euler_sum(s, &euler);
    ellsurf_check_star(s, 5, &good);

    char *report = NULL;
    EllsurfStatus st = ellsurf_cover_json(s, 5, "0", 0, false, &report);
    int split = report != NULL && strstr(report, "\"split\": true") != NULL;
    printf("euler=%llu good5=%d cover=%d split=%d\n", (unsigned long long)euler, good, (int)st, split);
    ellsurf_string_free(report);
    ellsurf_surface_free(s);

    st = ellsurf_surface_new("t +", "0", &s);
    printf("bad input=%d null=%d\n", (int)st, s == NULL);
    return 0;
}
