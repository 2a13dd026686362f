/* Links against the static library and prints the class count of the
 * obstacle square. Build: cc smoke.c -I../include ../../../target/debug/libditopo_ffi.a -lpthread -ldl -lm */
#include <stdio.h>
#include "ditopo.h"

int main(void) {
    DitopoSpace *space = NULL;
    if (ditopo_space_from_example("obstacle-square-3", &space) != DITOPO_ERROR_OK) {
        fprintf(stderr, "error: %s\n", ditopo_last_error_message());
        return 1;
    }
    size_t paths = 0, classes = 0;
    if (ditopo_grid_classes(space, 1000, &paths, &classes) != DITOPO_ERROR_OK) {
        fprintf(stderr, "error: %s\n", ditopo_last_error_message());
        ditopo_space_free(space);
        return 1;
    }
    printf("paths: %zu, classes: %zu\n", paths, classes);
    ditopo_space_free(space);

    if (ditopo_space_from_example("no-such-space", &space) != DITOPO_ERROR_DOCUMENT) {
        return 1;
    }
    return 0;
}
