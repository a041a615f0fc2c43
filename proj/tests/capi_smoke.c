// Copyright (c) 2026 The bcl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* Compiles the public header as C and drives a minimal workflow. */
#include <stdio.h>
#include <string.h>

#include "bcl/bcl.h"

int main(void) {
  const double re[] = {0.0, 1.0};
  bcl_series* f = NULL;
  bcl_series* y = NULL;
  double c = 0.0;
  double ci = 0.0;
  char* json = NULL;
  unsigned flags = 0;

  if (bcl_series_create(re, NULL, 2, &f) != BCL_OK) return 1;
  if (bcl_apply_beta_cesaro(f, 0.0, &y) != BCL_OK) return 1;
  if (bcl_series_coeff(y, 1, &c, &ci) != BCL_OK || c != 1.0 || ci != 0.0) return 1;
  if (bcl_series_div_by_z(y, NULL) != BCL_ERR_NULL_ARGUMENT) return 1;
  if (bcl_classify(2.0, 1.0, &flags, &json) != BCL_OK) return 1;
  if (strstr(json, "Bounded+EssentialNormZero") == NULL) return 1;
  bcl_string_free(json);
  bcl_series_free(y);
  bcl_series_free(f);
  puts("ok");
  return 0;
}
