#include "descent3/reference_data.hpp"

namespace descent3::reference {

const std::vector<PolynomialRow>& rank_six_polynomials() {
  static const std::vector<PolynomialRow> rows = {
      {0, -362, -2685, 362, 1, 2685, 1},
      {0, 34, -419, -34, 1, 419, 1},
      {-1, -145, 846, 436, 3, 21535, 27},
      {0, -236, -1459, 236, 1, 1459, 1},
      {-1, -539, -4660, 1618, 3, 130673, 27},
      {0, -55910, 5088413, 55910, 1, 5088413, 1},
  };
  return rows;
}

const std::vector<SeedRow>& negative_rank_two_seeds() {
  static const std::vector<SeedRow> rows = {
      {-100, 59, -4093987}, {-73, 5, -1556743},  {-98, 19, -3774515},  {-73, 11, -1559335},
      {-98, 53, -3840611},  {-71, 19, -1441391}, {-97, 29, -3673399},  {-53, 19, -605255},
      {-94, 19, -3332083},  {-52, 19, -572179},  {-91, 19, -3024031},  {-52, 37, -599395},
      {-91, 31, -3040231},  {-52, 55, -644107},  {-88, 49, -2790715},  {-49, 13, -475159},
      {-88, 57, -2813611},  {-46, 41, -434731},  {-86, 5, -2544899},   {-43, 35, -351103},
      {-86, 35, -2577299},  {-41, 3, -275927},   {-86, 57, -2631947},  {-38, 17, -227291},
      {-83, 13, -2291711},  {-37, 7, -203935},   {-82, 37, -2242435},  {-32, 23, -145355},
      {-79, 59, -2066143},  {-32, 43, -180995},  {-77, 39, -1867199},  {-31, 53, -195007},
      {-74, 19, -1630643},  {-23, 9, -50855},    {-74, 35, -1653971},  {-22, 49, -107419},
      {-73, 3, -1556311},   {-20, 59, -125987},  {-115, 3, -6083743},
  };
  return rows;
}

const std::vector<SeedRow>& positive_rank_one_seeds() {
  static const std::vector<SeedRow> rows = {
      {7, 3, 1129},    {10, 7, 2677},   {11, 3, 5081},   {13, 5, 8113},
      {13, 7, 7465},   {14, 3, 10733},  {16, 9, 14197},  {17, 7, 18329},
      {17, 9, 17465},  {19, 5, 26761},  {19, 7, 26113},  {20, 3, 31757},
  };
  return rows;
}

const std::vector<BinaryCubicForm>& violation_forms() {
  // coefficients of x^3, x^2 y, x y^2, y^3
  static const std::vector<BinaryCubicForm> forms = {
      {1, 0, -229, 3},
      {-134, 45, 41, -2},
      {-19, 16, 83, -7},
      {23, 20, -75, -17},
  };
  return forms;
}

}  // namespace descent3::reference
