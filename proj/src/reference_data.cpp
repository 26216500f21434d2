#include "rieszfc/harness.hpp"

// Reference errors and orders. Tables 1-2: five h levels 1/20..1/320 per alpha.
// Table 3: four levels, matched by the runner against h = 1/40..1/320.
// Tables 4-5: (tau, h) ladder starting at tau = h = 1/4.
namespace rieszfc {
namespace {

const std::vector<ReferenceRow> kTable1 = {
    {1.1, 0.0, 0.0001740717, 0.0, 0.0},
    {1.1, 0.0, 2.185595e-05, 0.0, 2.9936},
    {1.1, 0.0, 2.742123e-06, 0.0, 2.9947},
    {1.1, 0.0, 3.434158e-07, 0.0, 2.9973},
    {1.1, 0.0, 4.296784e-08, 0.0, 2.9986},
    {1.3, 0.0, 0.0001756079, 0.0, 0.0},
    {1.3, 0.0, 2.198613e-05, 0.0, 2.9977},
    {1.3, 0.0, 2.751417e-06, 0.0, 2.9983},
    {1.3, 0.0, 3.441531e-07, 0.0, 2.9991},
    {1.3, 0.0, 4.303416e-08, 0.0, 2.9995},
    {1.5, 0.0, 0.0001377134, 0.0, 0.0},
    {1.5, 0.0, 1.716087e-05, 0.0, 3.0045},
    {1.5, 0.0, 2.143372e-06, 0.0, 3.0012},
    {1.5, 0.0, 2.678606e-07, 0.0, 3.0003},
    {1.5, 0.0, 3.348027e-08, 0.0, 3.0001},
    {1.7, 0.0, 7.21165e-05, 0.0, 0.0},
    {1.7, 0.0, 8.991024e-06, 0.0, 3.0038},
    {1.7, 0.0, 1.123719e-06, 0.0, 3.0002},
    {1.7, 0.0, 1.404937e-07, 0.0, 2.9997},
    {1.7, 0.0, 1.756457e-08, 0.0, 2.9998},
    {1.9, 0.0, 1.056422e-05, 0.0, 0.0},
    {1.9, 0.0, 1.364672e-06, 0.0, 2.9526},
    {1.9, 0.0, 1.735867e-07, 0.0, 2.9748},
    {1.9, 0.0, 2.189369e-08, 0.0, 2.9871},
    {1.9, 0.0, 2.749249e-09, 0.0, 2.9934},
};
const std::vector<ReferenceRow> kTable2 = {
    {1.1, 0.0, 0.05290778, 0.0, 0.0},
    {1.1, 0.0, 0.006548041, 0.0, 3.0143},
    {1.1, 0.0, 0.0008150577, 0.0, 3.0061},
    {1.1, 0.0, 0.0001016718, 0.0, 3.003},
    {1.1, 0.0, 1.269602e-05, 0.0, 3.0015},
    {1.3, 0.0, 0.02033985, 0.0, 0.0},
    {1.3, 0.0, 0.002512801, 0.0, 3.0169},
    {1.3, 0.0, 0.0003117365, 0.0, 3.0109},
    {1.3, 0.0, 3.881109e-05, 0.0, 3.0058},
    {1.3, 0.0, 4.841522e-06, 0.0, 3.0029},
    {1.5, 0.0, 0.01263828, 0.0, 0.0},
    {1.5, 0.0, 0.001583605, 0.0, 2.9965},
    {1.5, 0.0, 0.0001966563, 0.0, 3.0095},
    {1.5, 0.0, 2.448135e-05, 0.0, 3.0059},
    {1.5, 0.0, 3.053477e-06, 0.0, 3.0032},
    {1.7, 0.0, 0.007701877, 0.0, 0.0},
    {1.7, 0.0, 0.0009893186, 0.0, 2.9607},
    {1.7, 0.0, 0.0001233352, 0.0, 3.0039},
    {1.7, 0.0, 1.537077e-05, 0.0, 3.0043},
    {1.7, 0.0, 1.917897e-06, 0.0, 3.0026},
    {1.9, 0.0, 0.002787724, 0.0, 0.0},
    {1.9, 0.0, 0.0003697284, 0.0, 2.9145},
    {1.9, 0.0, 4.637689e-05, 0.0, 2.995},
    {1.9, 0.0, 5.791288e-06, 0.0, 3.0014},
    {1.9, 0.0, 7.231609e-07, 0.0, 3.0015},
};
const std::vector<ReferenceRow> kTable3 = {
    {1.1, 0.0, 8.28168e-07, 0.0, 0.0},
    {1.1, 0.0, 5.167207e-08, 0.0, 4.0025},
    {1.1, 0.0, 3.218255e-09, 0.0, 4.005},
    {1.1, 0.0, 2.007975e-10, 0.0, 4.0025},
    {1.3, 0.0, 8.898742e-07, 0.0, 0.0},
    {1.3, 0.0, 5.777396e-08, 0.0, 3.9451},
    {1.3, 0.0, 3.654194e-09, 0.0, 3.9828},
    {1.3, 0.0, 2.294926e-10, 0.0, 3.993},
    {1.5, 0.0, 5.084772e-07, 0.0, 0.0},
    {1.5, 0.0, 3.725522e-08, 0.0, 3.7707},
    {1.5, 0.0, 2.454356e-09, 0.0, 3.924},
    {1.5, 0.0, 1.567338e-10, 0.0, 3.969},
    {1.7, 0.0, 1.822972e-07, 0.0, 0.0},
    {1.7, 0.0, 1.692478e-08, 0.0, 3.4291},
    {1.7, 0.0, 1.191028e-09, 0.0, 3.8289},
    {1.7, 0.0, 7.878076e-11, 0.0, 3.9182},
    {1.9, 0.0, 9.867011e-08, 0.0, 0.0},
    {1.9, 0.0, 7.533874e-09, 0.0, 3.7111},
    {1.9, 0.0, 5.041596e-10, 0.0, 3.9014},
    {1.9, 0.0, 3.322587e-11, 0.0, 3.9235},
};
const std::vector<ReferenceRow> kTable4 = {
    {1.1, 0.0, 2.984674e-06, 0.0, 0.0},
    {1.1, 0.0, 3.613655e-07, 2.0307, 3.046},
    {1.1, 0.0, 4.685713e-08, 1.9647, 2.9471},
    {1.1, 0.0, 5.813993e-09, 2.0071, 3.0107},
    {1.1, 0.0, 7.321694e-10, 1.9929, 2.9893},
    {1.3, 0.0, 2.984597e-06, 0.0, 0.0},
    {1.3, 0.0, 3.617522e-07, 2.0296, 3.0445},
    {1.3, 0.0, 4.690406e-08, 1.9648, 2.9472},
    {1.3, 0.0, 5.819491e-09, 2.0072, 3.0107},
    {1.3, 0.0, 7.328387e-10, 1.9929, 2.9893},
    {1.5, 0.0, 2.981516e-06, 0.0, 0.0},
    {1.5, 0.0, 3.616854e-07, 2.0288, 3.0432},
    {1.5, 0.0, 4.690789e-08, 1.9646, 2.9468},
    {1.5, 0.0, 5.819848e-09, 2.0072, 3.0108},
    {1.5, 0.0, 7.328573e-10, 1.9929, 2.9894},
    {1.7, 0.0, 2.974813e-06, 0.0, 0.0},
    {1.7, 0.0, 3.609314e-07, 2.0287, 3.043},
    {1.7, 0.0, 4.68382e-08, 1.964, 2.946},
    {1.7, 0.0, 5.811874e-09, 2.0071, 3.0106},
    {1.7, 0.0, 7.318735e-10, 1.9929, 2.9893},
    {1.9, 0.0, 2.963689e-06, 0.0, 0.0},
    {1.9, 0.0, 3.593385e-07, 2.0293, 3.044},
    {1.9, 0.0, 4.668265e-08, 1.9629, 2.9444},
    {1.9, 0.0, 5.795636e-09, 2.0066, 3.0098},
    {1.9, 0.0, 7.300171e-10, 1.9926, 2.989},
};
const std::vector<ReferenceRow> kTable5 = {
    {1.1, 1.8, 7.150284e-09, 0.0, 0.0},
    {1.1, 1.8, 8.680618e-10, 2.0281, 3.0421},
    {1.1, 1.8, 1.155609e-10, 1.9394, 2.9091},
    {1.1, 1.8, 1.42806e-11, 2.011, 3.0165},
    {1.3, 1.6, 7.22137e-09, 0.0, 0.0},
    {1.3, 1.6, 8.805609e-10, 2.0239, 3.0358},
    {1.3, 1.6, 1.168858e-10, 1.9422, 2.9133},
    {1.3, 1.6, 1.44286e-11, 2.0121, 3.0181},
    {1.5, 1.5, 7.219848e-09, 0.0, 0.0},
    {1.5, 1.5, 8.823037e-10, 2.0217, 3.0326},
    {1.5, 1.5, 1.171206e-10, 1.9422, 2.9133},
    {1.5, 1.5, 1.445519e-11, 2.0122, 3.0183},
    {1.7, 1.4, 7.181389e-09, 0.0, 0.0},
    {1.7, 1.4, 8.771397e-10, 2.0223, 3.0334},
    {1.7, 1.4, 1.165997e-10, 1.9408, 2.9112},
    {1.7, 1.4, 1.439652e-11, 2.0118, 3.0178},
    {1.9, 1.2, 7.102704e-09, 0.0, 0.0},
    {1.9, 1.2, 8.628679e-10, 2.0274, 3.0412},
    {1.9, 1.2, 1.150916e-10, 1.9376, 2.9064},
    {1.9, 1.2, 1.423779e-11, 2.01, 3.015},
};

}  // namespace

const std::vector<ReferenceRow>& reference_rows(int id) {
  switch (id) {
    case 1: return kTable1;
    case 2: return kTable2;
    case 3: return kTable3;
    case 4: return kTable4;
    case 5: return kTable5;
  }
  throw InvalidArgument("table id must be 1..5");
}

}  // namespace rieszfc
