#include <assert.h>
#include <math.h>
#include <stdio.h>
#include "hermite_zeros.h"

static double square(double x, void *context) {
    (void)context;
    return x * x;
}

int main(void) {
    double theta = 0.0;
    assert(hz_invert_segment_area(M_PI / 2.0, &theta) == HZ_STATUS_OK);
    assert(fabs(theta + sin(theta) - M_PI / 2.0) <= 1e-14);

    HzZeroSet *set = NULL;
    assert(hz_zero_set_new(5, HZ_METHOD_EXACT, &set) == HZ_STATUS_OK);
    assert(hz_zero_set_len(set) == 5);
    double zeros[5];
    assert(hz_zero_set_values(set, zeros, 5) == HZ_STATUS_OK);
    assert(zeros[2] == 0.0);
    hz_zero_set_free(set);

    HzQuadratureRule *rule = NULL;
    assert(hz_rule_new(8, HZ_NODE_SOURCE_EXACT_NODES, &rule) == HZ_STATUS_OK);
    double result = 0.0;
    assert(hz_rule_integrate(rule, square, NULL, &result) == HZ_STATUS_OK);
    assert(fabs(result - sqrt(M_PI) / 2.0) <= 1e-13);
    hz_rule_free(rule);

    printf("c smoke test passed\n");
    return 0;
}
