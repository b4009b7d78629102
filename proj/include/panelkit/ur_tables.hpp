#pragma once

// Simulated null tables for the unit-root battery: ADF t moments (IPS
// standardization), finite-sample ADF and Phillips-Perron quantiles (the
// response surfaces behind the p-values), and LLC mean/variance correction
// factors simulated from this library's own pipeline following the
// construction in Levin, Lin and Chu (2002).
//
// Generated by tools/gen_ur_tables.cpp: 100000 replications per quantile cell,
// 8000 panel replications (N=12) per LLC cell, driftless random walk null,
// seed 987654321. NaN entries mark infeasible cells. Do not edit by hand.

#include <limits>

namespace panelkit {
namespace diag {
namespace detail {

inline constexpr int kUrQuantileCount = 25;
inline constexpr double kUrQuantileProbs[kUrQuantileCount] = {
    0.0005, 0.001, 0.0025, 0.005, 0.01, 0.025, 0.05, 0.10, 0.15, 0.20, 0.30, 0.40, 0.50,
    0.60,   0.70,  0.80,   0.85,  0.90, 0.95,  0.975, 0.99, 0.995, 0.9975, 0.999, 0.9995};

inline constexpr double kUrNaN = std::numeric_limits<double>::quiet_NaN();

struct UrMomentRow {
    int t;
    int p;
    double mean_c;
    double var_c;
    double mean_ct;
    double var_ct;
};

struct UrQuantileRow {
    int t;
    int p;  // -1 for Phillips-Perron
    double q_c[kUrQuantileCount];
    double q_ct[kUrQuantileCount];
};

struct LlcFactorRow {
    int t;
    int p;
    double mu_c;
    double sigma_c;
    double mu_ct;
    double sigma_ct;
};

inline constexpr UrMomentRow kUrMoments[] = {
    {6, 0, -1.561969, 2.661146, -2.450363, 13.000116},
    {6, 1, -7.818294, 58127.043959, kUrNaN, kUrNaN},
    {6, 2, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {6, 3, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {6, 4, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {7, 0, -1.526120, 1.746185, -2.232755, 3.109690},
    {7, 1, -1.797047, 14.082995, -14.610730, 1186172.014363},
    {7, 2, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {7, 3, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {7, 4, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {8, 0, -1.515178, 1.412189, -2.183757, 1.883535},
    {8, 1, -1.549983, 3.072833, -2.684845, 81.156727},
    {8, 2, -6.800101, 181415.329770, kUrNaN, kUrNaN},
    {8, 3, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {8, 4, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {9, 0, -1.511862, 1.243665, -2.160380, 1.437862},
    {9, 1, -1.505466, 1.918156, -2.280358, 4.660266},
    {9, 2, -1.437846, 10.936619, -8.596960, 106593.357230},
    {9, 3, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {9, 4, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {10, 0, -1.514401, 1.130703, -2.167125, 1.255607},
    {10, 1, -1.491698, 1.548375, -2.207555, 2.332569},
    {10, 2, -1.308919, 2.808264, -2.147549, 20.673833},
    {10, 3, -5.608133, 96401.878884, kUrNaN, kUrNaN},
    {10, 4, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {12, 0, -1.505707, 1.017469, -2.160844, 1.034798},
    {12, 1, -1.492842, 1.248390, -2.163291, 1.431089},
    {12, 2, -1.309395, 1.578686, -1.893118, 2.074037},
    {12, 3, -1.329108, 3.122189, -2.229462, 29.479043},
    {12, 4, -5.955049, 54386.121426, kUrNaN, kUrNaN},
    {15, 0, -1.519465, 0.929925, -2.164878, 0.902318},
    {15, 1, -1.497464, 1.067039, -2.164579, 1.092845},
    {15, 2, -1.354378, 1.220616, -1.947709, 1.286537},
    {15, 3, -1.321910, 1.513402, -1.926079, 1.897215},
    {15, 4, -1.185812, 2.124455, -1.739381, 3.334548},
    {20, 0, -1.517895, 0.857966, -2.165980, 0.779544},
    {20, 1, -1.503801, 0.947344, -2.171593, 0.888745},
    {20, 2, -1.402855, 1.031060, -2.028068, 0.966918},
    {20, 3, -1.370387, 1.146004, -1.990350, 1.148533},
    {20, 4, -1.267210, 1.276208, -1.821197, 1.339887},
    {25, 0, -1.518611, 0.817986, -2.166584, 0.717856},
    {25, 1, -1.512211, 0.878810, -2.171095, 0.794392},
    {25, 2, -1.430369, 0.942958, -2.064707, 0.836725},
    {25, 3, -1.412881, 1.019442, -2.043128, 0.948367},
    {25, 4, -1.321224, 1.103988, -1.916633, 1.030631},
    {30, 0, -1.523680, 0.809453, -2.176132, 0.699106},
    {30, 1, -1.512508, 0.848761, -2.175756, 0.739797},
    {30, 2, -1.453130, 0.879094, -2.089814, 0.775802},
    {30, 3, -1.439427, 0.934569, -2.074575, 0.856254},
    {30, 4, -1.366531, 1.004309, -1.977967, 0.909349},
    {40, 0, -1.528562, 0.777168, -2.172537, 0.656490},
    {40, 1, -1.518283, 0.802353, -2.173019, 0.688124},
    {40, 2, -1.474423, 0.834501, -2.112819, 0.711203},
    {40, 3, -1.462377, 0.876765, -2.106180, 0.746361},
    {40, 4, -1.418040, 0.918645, -2.041693, 0.797845},
    {50, 0, -1.526855, 0.756653, -2.176872, 0.636774},
    {50, 1, -1.521246, 0.782502, -2.176808, 0.658017},
    {50, 2, -1.488250, 0.808782, -2.127257, 0.672155},
    {50, 3, -1.482521, 0.838604, -2.130037, 0.708517},
    {50, 4, -1.438265, 0.868996, -2.073764, 0.727552},
    {60, 0, -1.529776, 0.756850, -2.180463, 0.617842},
    {60, 1, -1.525477, 0.769030, -2.177891, 0.640659},
    {60, 2, -1.494748, 0.791394, -2.141974, 0.650671},
    {60, 3, -1.493191, 0.808229, -2.136435, 0.675962},
    {60, 4, -1.453387, 0.832902, -2.091703, 0.690939},
    {80, 0, -1.528069, 0.737984, -2.171646, 0.608771},
    {80, 1, -1.531609, 0.749917, -2.178992, 0.610777},
    {80, 2, -1.508757, 0.769693, -2.154923, 0.624338},
    {80, 3, -1.499404, 0.779895, -2.150269, 0.642955},
    {80, 4, -1.471140, 0.800338, -2.119991, 0.652800},
    {100, 0, -1.522330, 0.725704, -2.179647, 0.593027},
    {100, 1, -1.526409, 0.741823, -2.182554, 0.606325},
    {100, 2, -1.506094, 0.751974, -2.157297, 0.610489},
    {100, 3, -1.508148, 0.764682, -2.154700, 0.622907},
    {100, 4, -1.488650, 0.774865, -2.135112, 0.631883},
    {150, 0, -1.530570, 0.724187, -2.181017, 0.588927},
    {150, 1, -1.532491, 0.727956, -2.177582, 0.593749},
    {150, 2, -1.518340, 0.732851, -2.169351, 0.591607},
    {150, 3, -1.514434, 0.745729, -2.167662, 0.605820},
    {150, 4, -1.505057, 0.756660, -2.153800, 0.608800},
    {200, 0, -1.533179, 0.720125, -2.178811, 0.580687},
    {200, 1, -1.532611, 0.725345, -2.178662, 0.584882},
    {200, 2, -1.522411, 0.732043, -2.168843, 0.592828},
    {200, 3, -1.521244, 0.742546, -2.171270, 0.590506},
    {200, 4, -1.514548, 0.744383, -2.162321, 0.588246},
};

inline constexpr UrQuantileRow kAdfQuantiles[] = {
    {6, 0,
     {-17.537137, -14.439654, -10.971528, -8.740444, -6.945649, -5.048768, -4.005536, -3.135516, -2.664938, -2.358721, -1.951112, -1.647742, -1.401881, -1.163028, -0.879561, -0.539138, -0.329601, -0.051461, 0.386061, 0.833457, 1.448715, 2.018622, 2.746471, 4.023144, 4.968620},
     {-58.142942, -40.997409, -25.705316, -18.638933, -13.292537, -8.495126, -6.041641, -4.301420, -3.588641, -3.160714, -2.586407, -2.211493, -1.938719, -1.701440, -1.396944, -1.032696, -0.811104, -0.537251, -0.109077, 0.319475, 0.991199, 1.641710, 2.472979, 4.185776, 6.097626}},
    {6, 1,
     {-1241.491710, -681.345660, -279.116516, -139.847441, -71.974433, -28.504034, -14.544379, -7.199877, -4.735818, -3.510352, -2.297548, -1.685237, -1.266973, -0.934656, -0.578967, -0.158661, 0.097716, 0.455459, 1.187423, 2.407694, 5.876881, 11.322086, 20.377384, 54.841647, 100.059474},
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN}},
    {6, 2,
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN}},
    {6, 3,
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN}},
    {6, 4,
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN}},
    {7, 0,
     {-11.861058, -9.794737, -8.001716, -6.739273, -5.607719, -4.434879, -3.669291, -2.973212, -2.589453, -2.319519, -1.949682, -1.672473, -1.433673, -1.203007, -0.929791, -0.594399, -0.385634, -0.115212, 0.297465, 0.698172, 1.219039, 1.665056, 2.153677, 2.972773, 3.562767},
     {-22.249830, -17.411114, -12.668105, -10.127439, -8.048345, -6.049315, -4.905821, -3.895789, -3.364912, -3.016895, -2.564698, -2.238681, -1.975265, -1.743779, -1.496762, -1.169725, -0.965867, -0.708206, -0.311704, 0.063347, 0.548707, 0.995562, 1.413751, 2.162388, 2.892693}},
    {7, 1,
     {-51.861527, -38.049823, -25.762705, -17.816242, -12.429226, -7.858358, -5.495018, -3.810986, -3.066489, -2.602296, -2.015190, -1.640635, -1.332736, -1.041038, -0.715671, -0.333300, -0.099884, 0.196550, 0.696549, 1.253282, 2.208244, 3.174552, 4.486605, 7.376838, 11.223840},
     {-1808.484581, -865.080359, -349.251500, -176.927179, -93.430999, -39.044334, -19.900645, -10.039674, -6.615839, -4.947524, -3.261594, -2.404353, -1.853498, -1.444568, -1.079147, -0.655682, -0.409294, -0.094470, 0.448541, 1.200468, 3.214172, 6.553985, 13.054864, 34.390743, 62.567631}},
    {7, 2,
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN}},
    {7, 3,
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN}},
    {7, 4,
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN}},
    {8, 0,
     {-9.694611, -8.304866, -6.773366, -5.845966, -5.077636, -4.126285, -3.471305, -2.872917, -2.536125, -2.296726, -1.947373, -1.683008, -1.451935, -1.226420, -0.969148, -0.647547, -0.441461, -0.180187, 0.232587, 0.619511, 1.118545, 1.515931, 1.928013, 2.560032, 3.216435},
     {-13.730054, -11.627030, -9.302986, -7.783399, -6.671768, -5.316334, -4.461052, -3.693780, -3.271064, -2.972494, -2.553765, -2.257301, -2.008866, -1.780933, -1.549249, -1.249847, -1.054970, -0.807629, -0.422086, -0.068298, 0.364545, 0.718953, 1.094167, 1.661115, 2.250550}},
    {8, 1,
     {-18.676622, -15.007734, -11.210748, -9.014340, -7.274199, -5.297959, -4.185135, -3.228846, -2.734403, -2.415028, -1.981486, -1.661668, -1.385012, -1.113778, -0.804640, -0.436643, -0.209877, 0.092003, 0.562883, 1.019700, 1.669305, 2.188045, 2.840276, 3.797477, 4.820236},
     {-80.025474, -52.137299, -33.582890, -22.991422, -16.635450, -10.295343, -7.133634, -5.003158, -4.051730, -3.456845, -2.733613, -2.277063, -1.926971, -1.605876, -1.282611, -0.897330, -0.661500, -0.367973, 0.087462, 0.535104, 1.200908, 1.851213, 2.681337, 4.192331, 6.155772}},
    {8, 2,
     {-1202.583779, -618.188658, -224.306491, -110.047240, -54.566008, -22.874645, -11.223729, -5.587045, -3.764317, -2.882251, -1.980820, -1.457664, -1.078356, -0.744712, -0.370988, 0.071725, 0.375767, 0.824053, 1.890240, 3.892240, 9.940379, 19.802032, 41.074275, 101.899173, 168.760901},
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN}},
    {8, 3,
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN}},
    {8, 4,
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN}},
    {9, 0,
     {-8.077945, -7.208149, -6.058593, -5.391831, -4.726193, -3.938309, -3.367654, -2.816076, -2.504934, -2.277550, -1.950698, -1.695080, -1.468154, -1.242436, -0.990148, -0.667676, -0.466578, -0.214446, 0.176688, 0.536823, 0.998290, 1.349743, 1.734108, 2.238755, 2.700499},
     {-10.934751, -9.488805, -7.857273, -6.850434, -5.935716, -4.891514, -4.193529, -3.565128, -3.190332, -2.927452, -2.547977, -2.266624, -2.029267, -1.809579, -1.582027, -1.297098, -1.112428, -0.867780, -0.505504, -0.167855, 0.252555, 0.568167, 0.881149, 1.350750, 1.758328}},
    {9, 1,
     {-12.341617, -10.357534, -8.128263, -6.920337, -5.797947, -4.530394, -3.715283, -3.009510, -2.622067, -2.354085, -1.981855, -1.685399, -1.431285, -1.171524, -0.870366, -0.512741, -0.287409, 0.007476, 0.452715, 0.881363, 1.428794, 1.863964, 2.324591, 3.069613, 3.757634},
     {-24.677770, -19.967827, -14.418644, -11.560816, -9.190074, -6.743167, -5.328842, -4.128892, -3.540421, -3.162460, -2.654381, -2.295554, -1.989732, -1.708406, -1.410723, -1.046491, -0.813864, -0.535591, -0.106283, 0.292344, 0.840246, 1.287507, 1.776292, 2.622937, 3.286476}},
    {9, 2,
     {-45.966916, -34.199516, -20.447154, -14.674062, -10.460660, -6.640363, -4.699574, -3.335701, -2.715762, -2.320917, -1.808715, -1.444466, -1.144884, -0.847567, -0.505829, -0.101365, 0.152291, 0.498588, 1.101281, 1.752357, 2.924173, 4.310523, 6.582352, 9.599211, 15.176305},
     {-1608.997475, -636.470809, -275.767659, -132.900292, -69.667664, -28.737063, -14.343356, -7.168153, -4.829650, -3.682530, -2.609531, -1.987721, -1.542732, -1.175954, -0.809201, -0.373618, -0.101998, 0.256669, 0.990237, 2.150775, 5.653221, 11.110161, 23.038987, 57.124328, 128.954417}},
    {9, 3,
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN}},
    {9, 4,
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN}},
    {10, 0,
     {-7.630296, -6.627000, -5.664478, -5.031489, -4.476544, -3.795332, -3.291660, -2.786981, -2.486332, -2.270730, -1.949130, -1.701747, -1.480842, -1.260559, -1.019642, -0.702057, -0.502747, -0.249294, 0.138891, 0.494436, 0.930748, 1.242293, 1.573422, 1.942760, 2.305219},
     {-9.205644, -8.359312, -7.263419, -6.387888, -5.611151, -4.709774, -4.104449, -3.502476, -3.163678, -2.918680, -2.558629, -2.283040, -2.053120, -1.838339, -1.622247, -1.346675, -1.161414, -0.924634, -0.568703, -0.247292, 0.161807, 0.445729, 0.731258, 1.156677, 1.546711}},
    {10, 1,
     {-9.594830, -8.317715, -6.943632, -5.936942, -5.125098, -4.162214, -3.508963, -2.905729, -2.565667, -2.328272, -1.973068, -1.700354, -1.459246, -1.208131, -0.918061, -0.562288, -0.336931, -0.052916, 0.381754, 0.801123, 1.330698, 1.759744, 2.147621, 2.718444, 3.246980},
     {-14.878609, -12.870820, -10.468094, -8.740246, -7.241533, -5.711569, -4.690327, -3.843248, -3.380425, -3.073222, -2.642688, -2.314830, -2.042402, -1.780032, -1.497911, -1.153279, -0.933507, -0.650953, -0.220784, 0.166869, 0.656149, 1.042344, 1.468292, 1.973233, 2.463207}},
    {10, 2,
     {-17.196176, -14.068509, -10.284702, -8.348598, -6.552337, -4.843232, -3.803966, -2.971415, -2.518806, -2.214921, -1.796937, -1.486785, -1.212097, -0.934333, -0.607751, -0.211991, 0.037444, 0.360093, 0.872251, 1.395306, 2.127903, 2.844838, 3.808170, 5.135705, 6.822698},
     {-66.533280, -45.670876, -27.815066, -19.017155, -13.320410, -8.329378, -5.833432, -4.183029, -3.433032, -2.963242, -2.371309, -1.961307, -1.631557, -1.328016, -1.005184, -0.603346, -0.352090, -0.033630, 0.461363, 1.000998, 1.873864, 2.825493, 3.905324, 5.808985, 7.642217}},
    {10, 3,
     {-1095.979361, -578.868541, -232.719026, -119.772524, -62.071454, -25.087665, -12.295133, -6.122166, -4.062787, -3.052981, -2.014952, -1.478052, -1.083685, -0.738459, -0.360967, 0.108506, 0.410187, 0.854964, 1.866236, 3.712297, 9.159780, 18.661801, 39.090058, 106.260785, 169.497158},
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN}},
    {10, 4,
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN}},
    {12, 0,
     {-6.362814, -5.893313, -5.170814, -4.710542, -4.223217, -3.617729, -3.176029, -2.728445, -2.452669, -2.250441, -1.945201, -1.703879, -1.488755, -1.272555, -1.034270, -0.724475, -0.532431, -0.280881, 0.111711, 0.459568, 0.885005, 1.161968, 1.468966, 1.888509, 2.203087},
     {-7.590539, -7.042408, -6.344182, -5.698061, -5.115627, -4.434381, -3.923200, -3.407061, -3.103630, -2.884083, -2.556824, -2.300227, -2.079841, -1.869818, -1.655985, -1.393540, -1.219346, -0.993980, -0.649277, -0.332183, 0.060675, 0.356441, 0.616993, 0.922609, 1.185816}},
    {12, 1,
     {-7.251123, -6.567643, -5.741909, -5.096040, -4.511801, -3.829330, -3.311805, -2.812306, -2.507992, -2.293550, -1.976778, -1.719828, -1.492762, -1.260198, -0.982454, -0.633322, -0.408493, -0.126510, 0.292045, 0.678810, 1.164108, 1.525472, 1.904543, 2.404638, 2.874737},
     {-9.487633, -8.633008, -7.337324, -6.522373, -5.738248, -4.827589, -4.191515, -3.573761, -3.227478, -2.970200, -2.608709, -2.331447, -2.087230, -1.855935, -1.598095, -1.270538, -1.060060, -0.784346, -0.385748, -0.008042, 0.448943, 0.788426, 1.157133, 1.548370, 1.890233}},
    {12, 2,
     {-8.689901, -7.622142, -6.481699, -5.547907, -4.820802, -3.897410, -3.301203, -2.730929, -2.406592, -2.177517, -1.839249, -1.568398, -1.319279, -1.057535, -0.743034, -0.358129, -0.119069, 0.186098, 0.663514, 1.105745, 1.701101, 2.156392, 2.587053, 3.286923, 3.917276},
     {-13.375953, -11.205549, -9.160681, -7.650503, -6.363420, -5.060203, -4.226857, -3.466052, -3.055505, -2.767566, -2.362023, -2.060605, -1.794408, -1.531970, -1.241427, -0.864266, -0.630650, -0.333076, 0.110605, 0.522381, 1.065937, 1.534184, 2.005545, 2.749058, 3.457713}},
    {12, 3,
     {-18.072642, -14.812025, -10.716701, -8.641174, -6.895407, -5.033493, -3.935692, -3.040872, -2.582405, -2.267709, -1.827673, -1.502314, -1.215278, -0.927639, -0.587823, -0.176757, 0.086989, 0.413460, 0.925285, 1.425246, 2.163190, 2.817596, 3.571231, 4.696007, 5.896705},
     {-68.192597, -48.609257, -29.169735, -20.015261, -14.060326, -9.051166, -6.403291, -4.498882, -3.633777, -3.113072, -2.463483, -2.022702, -1.660567, -1.329879, -0.984277, -0.559269, -0.289890, 0.054949, 0.582798, 1.132863, 2.032035, 3.030852, 4.152341, 7.080690, 9.989325}},
    {12, 4,
     {-1529.934660, -555.318746, -217.121521, -111.534357, -54.108225, -21.223202, -10.585110, -5.292837, -3.584424, -2.742154, -1.852670, -1.357682, -0.991650, -0.642900, -0.249526, 0.250404, 0.595789, 1.111896, 2.330003, 4.698486, 11.829763, 23.898312, 45.166811, 104.432102, 193.107307},
     {kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN, kUrNaN}},
    {15, 0,
     {-5.852749, -5.372728, -4.791395, -4.392349, -4.017686, -3.519820, -3.111030, -2.691964, -2.437431, -2.249873, -1.959833, -1.724251, -1.515473, -1.306258, -1.065276, -0.764358, -0.571420, -0.321163, 0.052096, 0.375777, 0.801243, 1.091204, 1.376014, 1.730683, 1.992204},
     {-6.835333, -6.392761, -5.745605, -5.299532, -4.828949, -4.230996, -3.793449, -3.343564, -3.067494, -2.863614, -2.555015, -2.316392, -2.107671, -1.905003, -1.690777, -1.439889, -1.270682, -1.050126, -0.707090, -0.395735, -0.037559, 0.221362, 0.481213, 0.815320, 1.099779}},
    {15, 1,
     {-6.174688, -5.675138, -5.045187, -4.602684, -4.166065, -3.587426, -3.166880, -2.733240, -2.467751, -2.268574, -1.970493, -1.731064, -1.513594, -1.290716, -1.028041, -0.693223, -0.479485, -0.209899, 0.215702, 0.589477, 1.040262, 1.351562, 1.664757, 2.132371, 2.461425},
     {-7.569988, -6.904393, -6.116920, -5.591613, -5.088341, -4.421545, -3.920279, -3.424681, -3.134576, -2.915845, -2.596245, -2.344944, -2.121733, -1.907690, -1.676296, -1.372980, -1.173682, -0.919010, -0.530050, -0.171765, 0.267109, 0.586645, 0.898840, 1.274143, 1.595527}},
    {15, 2,
     {-6.498722, -5.793250, -5.140129, -4.655470, -4.197117, -3.558605, -3.096423, -2.642366, -2.370416, -2.174561, -1.871639, -1.626213, -1.397673, -1.154035, -0.863193, -0.495284, -0.260426, 0.033284, 0.492997, 0.917069, 1.421426, 1.792933, 2.164816, 2.651938, 3.047045},
     {-8.274558, -7.409259, -6.473413, -5.724410, -5.110209, -4.328825, -3.793716, -3.269941, -2.968616, -2.751460, -2.422240, -2.165190, -1.931403, -1.702126, -1.439292, -1.096598, -0.868647, -0.580332, -0.146119, 0.236892, 0.735407, 1.092960, 1.413167, 1.907664, 2.282817}},
    {15, 3,
     {-7.957824, -7.122148, -6.008741, -5.255215, -4.609348, -3.848572, -3.274502, -2.743932, -2.432832, -2.209938, -1.867142, -1.593586, -1.343167, -1.075432, -0.759300, -0.369761, -0.125543, 0.185202, 0.650132, 1.093549, 1.624415, 2.040272, 2.514589, 3.100724, 3.622148},
     {-11.435747, -9.836776, -8.095597, -7.034570, -6.047832, -4.948577, -4.212851, -3.510451, -3.123371, -2.838138, -2.429535, -2.121860, -1.853416, -1.586295, -1.285034, -0.896961, -0.661462, -0.358612, 0.103784, 0.527317, 1.059770, 1.441284, 1.819264, 2.443666, 2.926998}},
    {15, 4,
     {-11.405121, -9.513328, -7.584791, -6.315022, -5.301599, -4.171263, -3.424987, -2.755983, -2.394314, -2.133149, -1.754446, -1.457071, -1.184132, -0.899262, -0.552690, -0.130643, 0.142813, 0.482693, 1.000782, 1.496595, 2.174641, 2.767154, 3.456099, 4.398565, 5.301927},
     {-19.858430, -15.609635, -11.822935, -9.248678, -7.536027, -5.620166, -4.519971, -3.550282, -3.053724, -2.713753, -2.250950, -1.901895, -1.601059, -1.301336, -0.964676, -0.532404, -0.268711, 0.076847, 0.592751, 1.093633, 1.807482, 2.445456, 3.211899, 4.310719, 5.361094}},
    {20, 0,
     {-5.092769, -4.862731, -4.454533, -4.146701, -3.831392, -3.382311, -3.035136, -2.655990, -2.417466, -2.239853, -1.958250, -1.732833, -1.522005, -1.316910, -1.081915, -0.789531, -0.600869, -0.349596, 0.021385, 0.358404, 0.742989, 1.023474, 1.256478, 1.603553, 1.876458},
     {-6.132529, -5.786213, -5.216292, -4.879126, -4.515036, -4.044782, -3.672006, -3.272631, -3.027042, -2.845462, -2.556294, -2.326827, -2.123308, -1.927696, -1.722582, -1.479515, -1.324076, -1.119543, -0.779486, -0.472584, -0.097581, 0.133441, 0.380757, 0.663547, 0.917617}},
    {20, 1,
     {-5.475308, -5.132068, -4.626264, -4.236143, -3.908390, -3.437856, -3.065951, -2.673343, -2.433510, -2.254511, -1.974509, -1.739965, -1.527167, -1.312321, -1.065146, -0.746184, -0.535188, -0.266350, 0.136050, 0.491656, 0.931897, 1.230255, 1.547343, 1.902557, 2.141525},
     {-6.415518, -6.049520, -5.412039, -5.041876, -4.653439, -4.150602, -3.745584, -3.329458, -3.073175, -2.882408, -2.586398, -2.352804, -2.147436, -1.946676, -1.727193, -1.454739, -1.273297, -1.028615, -0.653571, -0.303308, 0.103119, 0.377445, 0.668166, 1.013829, 1.289045}},
    {20, 2,
     {-5.340776, -5.021626, -4.554055, -4.198626, -3.832651, -3.353938, -2.993856, -2.604749, -2.365845, -2.183362, -1.900359, -1.670785, -1.456417, -1.228679, -0.959691, -0.603511, -0.389787, -0.101427, 0.347758, 0.738603, 1.202551, 1.542986, 1.887334, 2.289556, 2.548447},
     {-6.421813, -5.966495, -5.363182, -4.962691, -4.535324, -4.017277, -3.628824, -3.206895, -2.949613, -2.759054, -2.476312, -2.246163, -2.034667, -1.827284, -1.590892, -1.285554, -1.078717, -0.809824, -0.394871, -0.024374, 0.426954, 0.759804, 1.047183, 1.455722, 1.783974}},
    {20, 3,
     {-5.750031, -5.357596, -4.811688, -4.377598, -3.938549, -3.417437, -3.035032, -2.629042, -2.375665, -2.186443, -1.897405, -1.659363, -1.431487, -1.191936, -0.896924, -0.528019, -0.293887, 0.005285, 0.463099, 0.877970, 1.385986, 1.711021, 2.058199, 2.460493, 2.838456},
     {-6.883436, -6.367737, -5.657889, -5.204546, -4.760885, -4.159826, -3.715956, -3.269651, -2.994360, -2.786381, -2.476115, -2.227481, -2.005062, -1.776555, -1.513944, -1.172062, -0.946282, -0.657136, -0.210928, 0.189525, 0.653072, 1.023828, 1.325917, 1.797273, 2.060553}},
    {20, 4,
     {-6.120311, -5.576047, -4.914034, -4.466144, -4.007994, -3.443721, -3.014429, -2.568587, -2.315390, -2.124192, -1.827428, -1.575516, -1.335495, -1.076323, -0.767556, -0.382996, -0.135325, 0.181731, 0.667200, 1.098818, 1.630014, 1.986782, 2.339596, 2.832250, 3.281739},
     {-7.587596, -6.751640, -5.886022, -5.357166, -4.831943, -4.159083, -3.666305, -3.193234, -2.898801, -2.678758, -2.345645, -2.080660, -1.838259, -1.591303, -1.302912, -0.932979, -0.691256, -0.387734, 0.087072, 0.501794, 1.014436, 1.401049, 1.794708, 2.332846, 2.627214}},
    {25, 0,
     {-5.030282, -4.692426, -4.311647, -4.035548, -3.748444, -3.317654, -2.980774, -2.629225, -2.401796, -2.230042, -1.959786, -1.736626, -1.528567, -1.323547, -1.094837, -0.806358, -0.616020, -0.371288, 0.003073, 0.323877, 0.698057, 0.979307, 1.227494, 1.530674, 1.732700},
     {-5.655085, -5.408133, -4.985322, -4.684999, -4.369719, -3.944862, -3.607195, -3.236198, -3.001611, -2.825772, -2.552078, -2.332347, -2.135445, -1.943324, -1.741492, -1.502812, -1.348476, -1.144714, -0.814411, -0.528531, -0.187250, 0.060892, 0.309678, 0.575589, 0.812189}},
    {25, 1,
     {-5.157418, -4.799513, -4.402945, -4.099465, -3.789393, -3.350148, -3.005374, -2.648676, -2.420758, -2.249275, -1.971455, -1.743982, -1.538931, -1.328002, -1.089634, -0.773525, -0.572028, -0.312433, 0.071785, 0.434789, 0.851035, 1.125895, 1.370717, 1.688500, 1.965757},
     {-5.996383, -5.607449, -5.149472, -4.821905, -4.469495, -4.018386, -3.656073, -3.274750, -3.035809, -2.855627, -2.573655, -2.349337, -2.150301, -1.956523, -1.753358, -1.492566, -1.317312, -1.085000, -0.720714, -0.385063, -0.001572, 0.281314, 0.518832, 0.816693, 1.090065}},
    {25, 2,
     {-5.067133, -4.768068, -4.342847, -4.048822, -3.741494, -3.287634, -2.949114, -2.584172, -2.352634, -2.182773, -1.910976, -1.691284, -1.484191, -1.267432, -1.007290, -0.673124, -0.451761, -0.172129, 0.247206, 0.622139, 1.070189, 1.397620, 1.728867, 2.120993, 2.394446},
     {-5.737036, -5.422042, -5.030413, -4.679859, -4.341566, -3.898432, -3.543393, -3.173056, -2.938081, -2.761688, -2.490483, -2.271470, -2.073330, -1.879526, -1.658716, -1.374804, -1.179712, -0.922172, -0.530918, -0.172179, 0.245277, 0.574185, 0.907877, 1.267560, 1.464741}},
    {25, 3,
     {-5.214164, -4.851980, -4.472769, -4.109676, -3.790373, -3.329664, -2.974285, -2.603889, -2.372876, -2.193813, -1.921268, -1.693659, -1.479795, -1.249994, -0.975028, -0.619555, -0.388976, -0.099188, 0.342077, 0.743611, 1.216741, 1.534138, 1.824040, 2.210892, 2.481473},
     {-6.172945, -5.720644, -5.236102, -4.832686, -4.443557, -3.960309, -3.593722, -3.205012, -2.966636, -2.785885, -2.502406, -2.275410, -2.069793, -1.860218, -1.618444, -1.304781, -1.093228, -0.818722, -0.379410, -0.001606, 0.446118, 0.755545, 1.071450, 1.447218, 1.740316}},
    {25, 4,
     {-5.335167, -4.955098, -4.526502, -4.117164, -3.765097, -3.276694, -2.914328, -2.538073, -2.305575, -2.128811, -1.858000, -1.626779, -1.405482, -1.166000, -0.873528, -0.500031, -0.256354, 0.058255, 0.518782, 0.935691, 1.428271, 1.802090, 2.112676, 2.592104, 2.843159},
     {-6.114174, -5.626644, -5.143809, -4.756443, -4.395336, -3.893674, -3.518937, -3.122912, -2.873468, -2.688685, -2.405787, -2.170507, -1.955428, -1.734891, -1.479154, -1.144386, -0.913587, -0.624988, -0.181766, 0.221607, 0.714103, 1.049583, 1.367584, 1.723239, 2.008963}},
    {30, 0,
     {-4.926825, -4.619503, -4.229035, -3.975126, -3.680301, -3.286318, -2.976799, -2.628189, -2.404314, -2.235128, -1.967665, -1.745707, -1.540389, -1.335417, -1.107654, -0.815778, -0.626339, -0.376586, 0.000032, 0.325239, 0.708144, 0.994578, 1.272423, 1.607447, 1.789330},
     {-5.548107, -5.281090, -4.903791, -4.614072, -4.319542, -3.914899, -3.584129, -3.234315, -3.004039, -2.830904, -2.564331, -2.346346, -2.149095, -1.958225, -1.757595, -1.517799, -1.365037, -1.162549, -0.845348, -0.544321, -0.185327, 0.055545, 0.299494, 0.567392, 0.783826}},
    {30, 1,
     {-4.919734, -4.648277, -4.281870, -3.972321, -3.696023, -3.304389, -2.979995, -2.634239, -2.409367, -2.238378, -1.969284, -1.747532, -1.544993, -1.333446, -1.093783, -0.787939, -0.592555, -0.334364, 0.060010, 0.407001, 0.816193, 1.116399, 1.401243, 1.740014, 1.945078},
     {-5.711494, -5.346517, -4.950272, -4.677059, -4.373063, -3.940559, -3.605575, -3.245181, -3.016625, -2.845003, -2.575337, -2.354955, -2.156423, -1.963755, -1.765903, -1.513446, -1.348483, -1.128509, -0.780586, -0.456400, -0.062503, 0.203251, 0.477354, 0.774913, 1.007412}},
    {30, 2,
     {-4.862515, -4.597637, -4.170980, -3.889009, -3.634510, -3.242493, -2.919094, -2.579075, -2.358022, -2.189010, -1.925692, -1.705848, -1.498960, -1.290479, -1.041818, -0.719681, -0.508105, -0.236530, 0.174104, 0.537109, 0.974080, 1.287044, 1.580098, 1.941044, 2.156646},
     {-5.477762, -5.251462, -4.862756, -4.575122, -4.270045, -3.860196, -3.521575, -3.162849, -2.936762, -2.768102, -2.502829, -2.288080, -2.095891, -1.904983, -1.692430, -1.421986, -1.241846, -0.999019, -0.616781, -0.272661, 0.165980, 0.462104, 0.708083, 1.092104, 1.442412}},
    {30, 3,
     {-4.832952, -4.605262, -4.247655, -3.944246, -3.649045, -3.254080, -2.932439, -2.584288, -2.364452, -2.194581, -1.933646, -1.711932, -1.502822, -1.285651, -1.023323, -0.677735, -0.460576, -0.176069, 0.253860, 0.636512, 1.103886, 1.418104, 1.711219, 2.096369, 2.387975},
     {-5.809791, -5.469033, -5.050266, -4.669671, -4.342234, -3.903361, -3.547553, -3.182572, -2.952691, -2.780945, -2.513802, -2.296418, -2.097634, -1.898542, -1.673936, -1.372794, -1.175327, -0.910415, -0.497471, -0.133304, 0.313249, 0.630500, 0.932597, 1.311651, 1.605245}},
    {30, 4,
     {-5.096988, -4.745126, -4.264021, -3.951582, -3.639541, -3.220729, -2.898507, -2.535771, -2.314607, -2.148274, -1.880765, -1.661157, -1.448059, -1.216739, -0.940487, -0.576233, -0.350208, -0.053337, 0.392763, 0.796762, 1.289003, 1.630752, 1.971863, 2.334345, 2.592261},
     {-5.689120, -5.360938, -4.893221, -4.559612, -4.237174, -3.804382, -3.466147, -3.105083, -2.883432, -2.711568, -2.446776, -2.227004, -2.024439, -1.813963, -1.571862, -1.250375, -1.038072, -0.760744, -0.333227, 0.058195, 0.550627, 0.903057, 1.193519, 1.523104, 1.852867}},
    {40, 0,
     {-4.686321, -4.449430, -4.125512, -3.861939, -3.613697, -3.251421, -2.948031, -2.610409, -2.392020, -2.231762, -1.968935, -1.750843, -1.550327, -1.346519, -1.120182, -0.835334, -0.647961, -0.399882, -0.026616, 0.299460, 0.693365, 0.950477, 1.201717, 1.496746, 1.720321},
     {-5.268268, -5.022143, -4.704258, -4.461515, -4.208483, -3.844418, -3.529426, -3.194631, -2.979299, -2.813899, -2.557479, -2.346577, -2.152795, -1.965520, -1.768967, -1.537400, -1.385080, -1.181606, -0.861114, -0.560622, -0.208050, 0.033319, 0.261238, 0.521449, 0.743594}},
    {40, 1,
     {-4.648612, -4.451650, -4.100020, -3.859740, -3.616234, -3.241615, -2.943141, -2.610469, -2.398862, -2.235284, -1.970885, -1.753269, -1.549113, -1.344329, -1.111199, -0.811597, -0.617271, -0.364039, 0.019981, 0.352149, 0.749852, 1.034397, 1.281652, 1.648583, 1.835027},
     {-5.248326, -5.078482, -4.773713, -4.502828, -4.228586, -3.848897, -3.540774, -3.210559, -2.993311, -2.828264, -2.569857, -2.356916, -2.161643, -1.975275, -1.772234, -1.530426, -1.370213, -1.153263, -0.807611, -0.501752, -0.130317, 0.135469, 0.372796, 0.754331, 1.018490}},
    {40, 2,
     {-4.599041, -4.419470, -4.083788, -3.825114, -3.562677, -3.199854, -2.901475, -2.574063, -2.363131, -2.197837, -1.937408, -1.722768, -1.523425, -1.316993, -1.073427, -0.763299, -0.556494, -0.291463, 0.107459, 0.483268, 0.934371, 1.221953, 1.510119, 1.842947, 2.075034},
     {-5.335101, -5.067932, -4.723448, -4.443578, -4.171773, -3.780669, -3.478531, -3.144219, -2.934007, -2.771584, -2.515854, -2.308536, -2.120892, -1.934567, -1.729315, -1.473137, -1.297753, -1.065804, -0.692868, -0.358240, 0.046324, 0.330514, 0.605483, 0.977028, 1.229169}},
    {40, 3,
     {-4.743783, -4.513656, -4.155882, -3.889068, -3.596059, -3.218997, -2.910269, -2.579779, -2.367765, -2.201203, -1.938741, -1.724794, -1.520147, -1.306751, -1.060054, -0.731242, -0.517367, -0.246913, 0.182302, 0.557158, 0.990376, 1.303676, 1.592008, 1.974924, 2.234674},
     {-5.298944, -5.037860, -4.701945, -4.441147, -4.168796, -3.793026, -3.485297, -3.152331, -2.940282, -2.776687, -2.523253, -2.317096, -2.127391, -1.936241, -1.727795, -1.458367, -1.270902, -1.022461, -0.628454, -0.269570, 0.168227, 0.473223, 0.764081, 1.111493, 1.318728}},
    {40, 4,
     {-4.627742, -4.408670, -4.097811, -3.841086, -3.561913, -3.200126, -2.889752, -2.557412, -2.341677, -2.173027, -1.911869, -1.695188, -1.488957, -1.272179, -1.009416, -0.663561, -0.445550, -0.161535, 0.271353, 0.656786, 1.125017, 1.441101, 1.733476, 2.135498, 2.376167},
     {-5.268217, -5.034234, -4.712544, -4.431173, -4.143025, -3.764950, -3.449764, -3.107926, -2.896017, -2.731600, -2.475107, -2.268716, -2.078428, -1.884513, -1.661352, -1.367722, -1.174892, -0.907754, -0.492724, -0.121301, 0.313923, 0.648321, 0.956168, 1.332420, 1.564577}},
    {50, 0,
     {-4.587148, -4.388430, -4.027116, -3.804893, -3.556766, -3.206834, -2.917308, -2.597339, -2.392367, -2.227818, -1.966935, -1.752558, -1.554240, -1.347350, -1.120617, -0.833219, -0.641166, -0.403111, -0.037755, 0.276616, 0.645081, 0.882315, 1.114112, 1.400469, 1.631262},
     {-5.231277, -4.935283, -4.666521, -4.439148, -4.172284, -3.802001, -3.515964, -3.186984, -2.972689, -2.808547, -2.557654, -2.348441, -2.161145, -1.974218, -1.777428, -1.546957, -1.396209, -1.199920, -0.883093, -0.593903, -0.257526, -0.024706, 0.208316, 0.485613, 0.682083}},
    {50, 1,
     {-4.515069, -4.336644, -4.051986, -3.840154, -3.594078, -3.227836, -2.931091, -2.605494, -2.390127, -2.224344, -1.965672, -1.750858, -1.550675, -1.349073, -1.120905, -0.826149, -0.633276, -0.383852, -0.001418, 0.331710, 0.726812, 1.014155, 1.271969, 1.582452, 1.790109},
     {-5.211042, -4.991840, -4.669745, -4.440052, -4.164655, -3.818200, -3.517039, -3.193983, -2.982768, -2.820851, -2.565402, -2.355773, -2.167695, -1.979786, -1.784482, -1.548558, -1.389440, -1.181594, -0.837273, -0.534275, -0.170909, 0.086773, 0.318830, 0.593999, 0.783215}},
    {50, 2,
     {-4.595836, -4.330778, -4.049918, -3.806787, -3.556502, -3.194565, -2.900727, -2.582061, -2.367228, -2.203968, -1.944426, -1.731317, -1.531388, -1.325078, -1.089088, -0.781699, -0.582258, -0.319770, 0.072424, 0.414382, 0.834948, 1.140979, 1.402616, 1.688548, 1.922601},
     {-5.072509, -4.881315, -4.594978, -4.365387, -4.108878, -3.751901, -3.463817, -3.143830, -2.934898, -2.774273, -2.522572, -2.314351, -2.130444, -1.948206, -1.749972, -1.503831, -1.336542, -1.110437, -0.746305, -0.419600, -0.039636, 0.219547, 0.465684, 0.829719, 1.068656}},
    {50, 3,
     {-4.635559, -4.360934, -4.049068, -3.815608, -3.556634, -3.206906, -2.909701, -2.584322, -2.374824, -2.209967, -1.949706, -1.735997, -1.535210, -1.325607, -1.083729, -0.765770, -0.556175, -0.288050, 0.124308, 0.484212, 0.897736, 1.203654, 1.483495, 1.784052, 2.012302},
     {-5.231653, -4.993544, -4.679071, -4.395492, -4.143250, -3.784072, -3.484462, -3.162669, -2.949464, -2.789396, -2.540111, -2.331561, -2.140572, -1.954307, -1.749762, -1.491627, -1.312484, -1.078681, -0.706913, -0.360503, 0.043122, 0.331668, 0.623060, 0.907412, 1.128489}},
    {50, 4,
     {-4.593947, -4.344873, -4.024844, -3.781764, -3.520340, -3.165675, -2.874110, -2.549424, -2.339207, -2.177256, -1.920013, -1.702804, -1.504785, -1.292981, -1.039239, -0.705351, -0.493838, -0.221611, 0.204864, 0.581078, 1.038443, 1.344348, 1.633220, 2.037103, 2.273846},
     {-5.160598, -4.920655, -4.592502, -4.358724, -4.066229, -3.727916, -3.426597, -3.101661, -2.896441, -2.737767, -2.489057, -2.285119, -2.099460, -1.914257, -1.708655, -1.437063, -1.244433, -0.999162, -0.600727, -0.237966, 0.190952, 0.475613, 0.746442, 1.114723, 1.335498}},
    {60, 0,
     {-4.612465, -4.380929, -4.044778, -3.796760, -3.558118, -3.212278, -2.920381, -2.599779, -2.391227, -2.234373, -1.974314, -1.754681, -1.554266, -1.352554, -1.126481, -0.837976, -0.650066, -0.407332, -0.040222, 0.279129, 0.655008, 0.913986, 1.125955, 1.390474, 1.615005},
     {-5.113920, -4.914029, -4.600147, -4.365414, -4.132151, -3.771560, -3.494951, -3.172347, -2.965036, -2.809019, -2.561718, -2.356438, -2.166864, -1.982429, -1.787069, -1.555069, -1.407079, -1.212315, -0.900002, -0.624277, -0.286383, -0.040432, 0.196856, 0.468545, 0.619728}},
    {60, 1,
     {-4.574612, -4.331067, -4.038704, -3.795592, -3.540597, -3.204057, -2.912203, -2.597681, -2.392063, -2.230494, -1.976338, -1.756684, -1.557919, -1.354045, -1.126856, -0.832283, -0.639894, -0.388413, -0.011155, 0.314412, 0.712798, 0.986978, 1.233988, 1.473996, 1.706515},
     {-5.082582, -4.868788, -4.594467, -4.375337, -4.136531, -3.786465, -3.494333, -3.179184, -2.978982, -2.817395, -2.565139, -2.357829, -2.170998, -1.988059, -1.793491, -1.555434, -1.398731, -1.183699, -0.850697, -0.553572, -0.192475, 0.048169, 0.313155, 0.594876, 0.760626}},
    {60, 2,
     {-4.537470, -4.271675, -3.991698, -3.774190, -3.527880, -3.173479, -2.892839, -2.576072, -2.371145, -2.207442, -1.949126, -1.739449, -1.536784, -1.327744, -1.099090, -0.791013, -0.591969, -0.340866, 0.047400, 0.390845, 0.786970, 1.046947, 1.339788, 1.698646, 1.977991},
     {-5.007098, -4.804339, -4.548992, -4.310032, -4.073019, -3.733750, -3.455282, -3.141255, -2.939747, -2.787293, -2.537778, -2.335232, -2.147377, -1.960273, -1.760360, -1.519666, -1.359413, -1.136237, -0.791490, -0.477441, -0.085447, 0.173420, 0.417998, 0.737803, 0.951053}},
    {60, 3,
     {-4.441868, -4.274136, -3.984711, -3.765314, -3.525767, -3.183802, -2.899587, -2.576187, -2.373049, -2.210769, -1.955578, -1.738852, -1.541080, -1.336719, -1.098623, -0.788800, -0.581695, -0.322099, 0.074355, 0.429102, 0.865824, 1.153705, 1.415444, 1.723929, 1.955775},
     {-5.117374, -4.906515, -4.617600, -4.348880, -4.118949, -3.760801, -3.466545, -3.142496, -2.943141, -2.787371, -2.536879, -2.329577, -2.142043, -1.958685, -1.758852, -1.509685, -1.342035, -1.116707, -0.752352, -0.419882, -0.016445, 0.262569, 0.541378, 0.841158, 1.029847}},
    {60, 4,
     {-4.470226, -4.282058, -3.974246, -3.743288, -3.503419, -3.153272, -2.860651, -2.542537, -2.335829, -2.174563, -1.928652, -1.714106, -1.515228, -1.308598, -1.059569, -0.741790, -0.527502, -0.254290, 0.153291, 0.513817, 0.948056, 1.244370, 1.536356, 1.896234, 2.192582},
     {-5.101482, -4.883669, -4.567140, -4.311566, -4.038666, -3.691268, -3.406700, -3.101360, -2.901908, -2.745111, -2.498209, -2.299786, -2.111701, -1.930061, -1.730035, -1.467366, -1.283544, -1.042736, -0.663380, -0.322990, 0.096928, 0.374007, 0.667783, 1.002839, 1.291484}},
    {80, 0,
     {-4.505435, -4.252005, -3.987061, -3.768304, -3.510766, -3.172853, -2.899101, -2.591805, -2.383403, -2.220133, -1.964623, -1.755523, -1.555916, -1.353677, -1.126349, -0.844039, -0.658788, -0.418619, -0.053826, 0.257587, 0.640985, 0.880345, 1.122321, 1.370230, 1.622196},
     {-5.095360, -4.892545, -4.555023, -4.300962, -4.069945, -3.740019, -3.462837, -3.151589, -2.953270, -2.798479, -2.556422, -2.352408, -2.161698, -1.978022, -1.783122, -1.552974, -1.406330, -1.206100, -0.894100, -0.607160, -0.272405, -0.036884, 0.183081, 0.482795, 0.706878}},
    {80, 1,
     {-4.576530, -4.294832, -3.959089, -3.741663, -3.508343, -3.182825, -2.906485, -2.593844, -2.386297, -2.229934, -1.975326, -1.760581, -1.563174, -1.362658, -1.137100, -0.846845, -0.661101, -0.413937, -0.049260, 0.291279, 0.694513, 0.972254, 1.222955, 1.525692, 1.727521},
     {-4.984228, -4.788144, -4.501017, -4.292175, -4.070036, -3.744916, -3.463254, -3.158278, -2.960708, -2.806182, -2.562042, -2.361696, -2.175606, -1.989573, -1.797197, -1.563876, -1.413286, -1.211650, -0.886360, -0.594575, -0.242974, -0.005736, 0.224005, 0.551596, 0.763110}},
    {80, 2,
     {-4.505105, -4.299594, -3.994670, -3.743390, -3.507989, -3.168944, -2.892875, -2.577195, -2.370015, -2.209141, -1.958396, -1.746433, -1.549140, -1.346058, -1.114434, -0.823334, -0.627015, -0.374980, 0.011762, 0.359996, 0.775987, 1.051886, 1.304577, 1.592391, 1.840599},
     {-4.902819, -4.749728, -4.498944, -4.270614, -4.037230, -3.715949, -3.439225, -3.138810, -2.938874, -2.783786, -2.546367, -2.343194, -2.159763, -1.979721, -1.779887, -1.537765, -1.386247, -1.177422, -0.826460, -0.512560, -0.150200, 0.103228, 0.348127, 0.641837, 0.872116}},
    {80, 3,
     {-4.404634, -4.232346, -3.940805, -3.722625, -3.483847, -3.154529, -2.874484, -2.570242, -2.368385, -2.212491, -1.955773, -1.744922, -1.545013, -1.342342, -1.104957, -0.806301, -0.608430, -0.347510, 0.045196, 0.389445, 0.815228, 1.102910, 1.338553, 1.652783, 1.828257},
     {-4.958521, -4.772192, -4.497778, -4.289694, -4.051203, -3.722059, -3.454216, -3.141942, -2.942517, -2.788221, -2.542939, -2.343353, -2.155843, -1.975200, -1.779294, -1.536052, -1.375016, -1.152850, -0.800265, -0.479703, -0.074609, 0.189534, 0.437500, 0.772995, 1.001127}},
    {80, 4,
     {-4.391074, -4.219075, -3.912124, -3.698528, -3.459858, -3.135992, -2.856365, -2.549523, -2.345940, -2.184603, -1.934691, -1.725214, -1.527936, -1.321894, -1.084578, -0.769195, -0.559017, -0.296773, 0.097313, 0.459747, 0.878775, 1.161255, 1.447885, 1.752840, 2.031603},
     {-4.913353, -4.722675, -4.438851, -4.217362, -4.000785, -3.673770, -3.402765, -3.110713, -2.917989, -2.763839, -2.521805, -2.321831, -2.137567, -1.956015, -1.758696, -1.508035, -1.336094, -1.103646, -0.730067, -0.398557, -0.009884, 0.285656, 0.558078, 0.839195, 1.021896}},
    {100, 0,
     {-4.402215, -4.230459, -3.936099, -3.728293, -3.484393, -3.139045, -2.876570, -2.572302, -2.367210, -2.210317, -1.961912, -1.751595, -1.553367, -1.351537, -1.130402, -0.842903, -0.658057, -0.417249, -0.052106, 0.256969, 0.633080, 0.885429, 1.107556, 1.367622, 1.567874},
     {-4.961224, -4.791287, -4.493886, -4.272824, -4.049556, -3.725693, -3.448288, -3.152354, -2.957136, -2.803711, -2.559247, -2.358462, -2.170502, -1.989513, -1.796733, -1.564549, -1.415161, -1.225607, -0.914542, -0.641342, -0.306472, -0.087481, 0.119944, 0.369060, 0.538018}},
    {100, 1,
     {-4.403068, -4.238761, -3.945405, -3.725157, -3.497404, -3.163924, -2.892428, -2.579345, -2.382352, -2.223101, -1.970695, -1.756635, -1.560230, -1.357933, -1.132646, -0.841678, -0.655487, -0.413992, -0.046929, 0.283053, 0.670320, 0.946494, 1.197705, 1.531474, 1.766031},
     {-4.952792, -4.783954, -4.512581, -4.297526, -4.058501, -3.726350, -3.462850, -3.157874, -2.965766, -2.813102, -2.565463, -2.362244, -2.177696, -1.995099, -1.803044, -1.568315, -1.421247, -1.219257, -0.894248, -0.599897, -0.253036, -0.021726, 0.203329, 0.469359, 0.669147}},
    {100, 2,
     {-4.377668, -4.181881, -3.933054, -3.711020, -3.476873, -3.147776, -2.870776, -2.570713, -2.360025, -2.202667, -1.953538, -1.742681, -1.547480, -1.342438, -1.112778, -0.818831, -0.625890, -0.378030, -0.005112, 0.329492, 0.708924, 0.961568, 1.225016, 1.553418, 1.783322},
     {-4.945074, -4.713365, -4.443975, -4.243022, -4.023709, -3.693914, -3.428644, -3.132479, -2.934597, -2.784664, -2.544363, -2.345464, -2.160184, -1.978232, -1.783031, -1.548143, -1.394370, -1.182591, -0.853629, -0.553192, -0.193465, 0.074452, 0.319904, 0.648092, 0.883344}},
    {100, 3,
     {-4.439321, -4.227538, -3.940291, -3.725228, -3.488074, -3.154425, -2.870120, -2.569227, -2.366072, -2.208474, -1.957185, -1.749101, -1.552108, -1.353744, -1.121917, -0.823858, -0.627503, -0.371005, 0.019362, 0.372541, 0.766221, 1.047309, 1.292526, 1.589041, 1.861559},
     {-4.975846, -4.767109, -4.509305, -4.274092, -4.040326, -3.708947, -3.434839, -3.133942, -2.937770, -2.783117, -2.541743, -2.342924, -2.158490, -1.977186, -1.784479, -1.548472, -1.390764, -1.174281, -0.831411, -0.514308, -0.137767, 0.143147, 0.395741, 0.690436, 0.897888}},
    {100, 4,
     {-4.302981, -4.154525, -3.904440, -3.677572, -3.450506, -3.128943, -2.862864, -2.553390, -2.356158, -2.195868, -1.947726, -1.736653, -1.540020, -1.336526, -1.099971, -0.794615, -0.592907, -0.336581, 0.062784, 0.405910, 0.808185, 1.075933, 1.332726, 1.638032, 1.866828},
     {-4.894851, -4.734367, -4.474685, -4.228973, -4.014795, -3.688497, -3.415630, -3.109377, -2.916684, -2.767300, -2.530098, -2.331172, -2.144966, -1.965029, -1.772336, -1.529705, -1.364907, -1.142440, -0.784446, -0.472033, -0.067649, 0.208618, 0.480780, 0.816254, 1.015952}},
    {150, 0,
     {-4.419817, -4.202565, -3.929174, -3.710793, -3.485699, -3.159027, -2.881628, -2.576302, -2.377197, -2.219888, -1.968975, -1.757596, -1.562653, -1.359764, -1.136596, -0.851044, -0.665892, -0.425350, -0.069578, 0.244479, 0.612563, 0.871309, 1.110305, 1.419083, 1.657487},
     {-4.874078, -4.715995, -4.457163, -4.235184, -4.031462, -3.712499, -3.444014, -3.148812, -2.953241, -2.801288, -2.559854, -2.362447, -2.177298, -1.995619, -1.798949, -1.572383, -1.424878, -1.228387, -0.915238, -0.629354, -0.296433, -0.062983, 0.128456, 0.413798, 0.581435}},
    {150, 1,
     {-4.373353, -4.201411, -3.915929, -3.708494, -3.468258, -3.146037, -2.884072, -2.580448, -2.378642, -2.224499, -1.976078, -1.763575, -1.565705, -1.364394, -1.141843, -0.854412, -0.669804, -0.424907, -0.061279, 0.275667, 0.645812, 0.898574, 1.125905, 1.437411, 1.668620},
     {-4.926335, -4.759375, -4.489678, -4.270880, -4.029708, -3.703401, -3.442311, -3.144573, -2.949564, -2.797962, -2.557729, -2.358153, -2.174913, -1.994570, -1.801782, -1.570393, -1.417747, -1.218932, -0.910076, -0.622462, -0.263420, -0.018718, 0.217664, 0.500564, 0.716522}},
    {150, 2,
     {-4.390062, -4.177769, -3.898389, -3.673358, -3.451969, -3.135874, -2.866781, -2.568242, -2.369093, -2.208443, -1.962311, -1.752055, -1.554823, -1.353874, -1.127667, -0.841330, -0.651838, -0.411725, -0.037775, 0.285723, 0.691555, 0.947920, 1.179794, 1.488847, 1.696058},
     {-4.897839, -4.705914, -4.425568, -4.205866, -3.990538, -3.683478, -3.429548, -3.132427, -2.937148, -2.789844, -2.554509, -2.357631, -2.171493, -1.989779, -1.797477, -1.560413, -1.412080, -1.209653, -0.890362, -0.593503, -0.244528, 0.005251, 0.195845, 0.493084, 0.659836}},
    {150, 3,
     {-4.391539, -4.202152, -3.929264, -3.711109, -3.476526, -3.134541, -2.873849, -2.563085, -2.362461, -2.209549, -1.960156, -1.751521, -1.557806, -1.356134, -1.129506, -0.834966, -0.637815, -0.387376, -0.010663, 0.317666, 0.712035, 0.972394, 1.228722, 1.563403, 1.802559},
     {-4.962702, -4.769578, -4.488746, -4.262953, -4.022543, -3.700774, -3.426471, -3.133397, -2.942304, -2.793443, -2.557881, -2.356798, -2.169199, -1.989532, -1.794849, -1.560436, -1.409457, -1.198782, -0.868443, -0.568716, -0.198324, 0.050146, 0.312427, 0.609317, 0.826312}},
    {150, 4,
     {-4.380663, -4.157245, -3.879148, -3.663861, -3.454186, -3.132061, -2.865561, -2.561054, -2.361391, -2.207010, -1.958465, -1.749034, -1.549534, -1.349139, -1.115786, -0.820362, -0.624775, -0.369003, 0.014522, 0.363539, 0.751555, 1.017439, 1.293431, 1.608895, 1.795826},
     {-4.867273, -4.669236, -4.419707, -4.196221, -3.989573, -3.685317, -3.418293, -3.124863, -2.928506, -2.778019, -2.542060, -2.342548, -2.161126, -1.979590, -1.785554, -1.551595, -1.396820, -1.181920, -0.838773, -0.524382, -0.157691, 0.106210, 0.337915, 0.632369, 0.864118}},
    {200, 0,
     {-4.345990, -4.143615, -3.896569, -3.679989, -3.453120, -3.143289, -2.873049, -2.579537, -2.378275, -2.223149, -1.973751, -1.761429, -1.565545, -1.365238, -1.143501, -0.856983, -0.669104, -0.426129, -0.068636, 0.241274, 0.609104, 0.875955, 1.093333, 1.418772, 1.600118},
     {-4.866107, -4.707894, -4.440084, -4.219377, -4.004607, -3.699770, -3.439314, -3.144368, -2.950380, -2.796259, -2.556311, -2.355619, -2.170640, -1.990455, -1.798249, -1.573265, -1.429324, -1.235323, -0.926807, -0.641618, -0.307624, -0.082091, 0.154160, 0.427681, 0.635685}},
    {200, 1,
     {-4.366422, -4.151622, -3.906362, -3.689510, -3.461522, -3.148990, -2.871824, -2.572998, -2.378382, -2.223051, -1.972706, -1.764284, -1.570080, -1.369780, -1.143790, -0.858632, -0.671216, -0.428676, -0.058379, 0.266419, 0.658993, 0.918279, 1.147002, 1.451863, 1.625419},
     {-4.875072, -4.675818, -4.425954, -4.216926, -4.006589, -3.697876, -3.438186, -3.139951, -2.946533, -2.795675, -2.558532, -2.357716, -2.176809, -1.996281, -1.804161, -1.570631, -1.424098, -1.230475, -0.916641, -0.625316, -0.284051, -0.049003, 0.185552, 0.456530, 0.680467}},
    {200, 2,
     {-4.349805, -4.167904, -3.901759, -3.693346, -3.468417, -3.142728, -2.871287, -2.573696, -2.369875, -2.213845, -1.963734, -1.753750, -1.556446, -1.356609, -1.136656, -0.848389, -0.656406, -0.413227, -0.045355, 0.287711, 0.682309, 0.939791, 1.189581, 1.476473, 1.720699},
     {-4.854799, -4.667341, -4.393249, -4.211326, -3.990859, -3.679602, -3.420228, -3.135517, -2.944730, -2.793266, -2.555857, -2.358424, -2.173076, -1.987158, -1.792862, -1.558105, -1.408913, -1.208168, -0.887200, -0.594517, -0.253176, 0.006368, 0.231496, 0.509486, 0.724831}},
    {200, 3,
     {-4.290306, -4.120128, -3.877429, -3.705665, -3.473068, -3.140535, -2.878190, -2.573936, -2.372769, -2.216163, -1.968586, -1.758122, -1.562507, -1.361787, -1.133984, -0.841329, -0.646436, -0.396232, -0.016323, 0.310739, 0.697962, 0.959061, 1.222282, 1.520695, 1.709253},
     {-4.850208, -4.682901, -4.438724, -4.230944, -4.003284, -3.685262, -3.427138, -3.131893, -2.941856, -2.789037, -2.553031, -2.353946, -2.173027, -1.993121, -1.800991, -1.565031, -1.416321, -1.210892, -0.893548, -0.598728, -0.247549, 0.000495, 0.220453, 0.532493, 0.767341}},
    {200, 4,
     {-4.356820, -4.145868, -3.873095, -3.672429, -3.450397, -3.127514, -2.864939, -2.564397, -2.363613, -2.208884, -1.962162, -1.755105, -1.559541, -1.361238, -1.132381, -0.831517, -0.638479, -0.385737, -0.006438, 0.325362, 0.716622, 1.021558, 1.261886, 1.593403, 1.803750},
     {-4.834188, -4.622153, -4.379874, -4.171412, -3.958663, -3.659278, -3.411588, -3.124762, -2.932064, -2.782319, -2.546241, -2.345982, -2.164196, -1.984961, -1.796668, -1.565212, -1.412619, -1.208592, -0.881571, -0.574246, -0.217955, 0.041636, 0.269934, 0.553930, 0.747220}},
};

inline constexpr UrQuantileRow kPpQuantiles[] = {
    {6, -1,
     {-28.530517, -22.476778, -16.642369, -12.759478, -10.002125, -7.232352, -5.495470, -3.988853, -3.238178, -2.760130, -2.123794, -1.697791, -1.372227, -1.095170, -0.771708, -0.345579, -0.051988, 0.365159, 1.118298, 1.964296, 3.244202, 4.347349, 5.574515, 7.835175, 10.023718},
     {-116.548377, -80.771142, -48.741156, -34.123858, -24.337307, -15.155169, -10.536584, -7.262382, -5.839445, -4.896529, -3.677199, -2.875526, -2.276912, -1.726699, -1.133466, -0.460567, -0.053404, 0.461073, 1.338417, 2.346267, 3.969087, 5.478018, 7.430418, 11.024254, 14.672536}},
    {7, -1,
     {-19.102561, -15.132323, -11.459022, -9.477286, -7.872023, -5.918902, -4.575982, -3.461192, -2.889320, -2.512673, -2.015888, -1.681246, -1.414493, -1.176892, -0.892787, -0.500837, -0.234050, 0.138852, 0.781830, 1.476564, 2.400924, 3.199084, 4.144552, 5.533270, 6.383721},
     {-37.629344, -30.406293, -21.849026, -17.096865, -13.647870, -9.905577, -7.662599, -5.704691, -4.689180, -4.011864, -3.100280, -2.493110, -2.037970, -1.656612, -1.290032, -0.831931, -0.548827, -0.168775, 0.479564, 1.169606, 2.230188, 3.191524, 4.303529, 6.043039, 7.544358}},
    {8, -1,
     {-14.025229, -12.180804, -9.695765, -8.158594, -6.742282, -5.126694, -4.103093, -3.203740, -2.729602, -2.419546, -1.991680, -1.694190, -1.457898, -1.235689, -0.963195, -0.577570, -0.317461, 0.031471, 0.625511, 1.221862, 2.058470, 2.694514, 3.427252, 4.271839, 5.104258},
     {-23.088472, -19.435575, -15.300198, -12.678393, -10.589261, -8.088866, -6.352929, -4.831909, -4.036032, -3.509294, -2.814239, -2.346541, -1.989110, -1.690724, -1.405594, -1.046012, -0.799601, -0.477628, 0.078571, 0.671672, 1.563561, 2.273131, 3.090682, 4.216696, 5.429444}},
    {9, -1,
     {-11.355217, -10.189649, -8.242539, -7.028850, -5.898560, -4.633837, -3.784002, -3.032354, -2.631956, -2.358511, -1.978254, -1.704085, -1.484599, -1.278612, -1.006317, -0.638932, -0.389065, -0.043980, 0.515008, 1.068034, 1.791426, 2.365707, 2.996987, 3.848711, 4.633703},
     {-17.837050, -14.844487, -12.543268, -10.731565, -8.949031, -6.897835, -5.533030, -4.319358, -3.675322, -3.245119, -2.667492, -2.281606, -1.984176, -1.733885, -1.492513, -1.190600, -0.975662, -0.679548, -0.168526, 0.349324, 1.057536, 1.656250, 2.272764, 3.126551, 3.800020}},
    {10, -1,
     {-10.588001, -9.082996, -7.398513, -6.314007, -5.368865, -4.289486, -3.563532, -2.920326, -2.566751, -2.320595, -1.972992, -1.722072, -1.510442, -1.304107, -1.043424, -0.683451, -0.445755, -0.130667, 0.406083, 0.909502, 1.613997, 2.161295, 2.691627, 3.558756, 4.038203},
     {-14.501924, -12.982654, -10.734395, -9.207018, -7.731382, -6.025920, -4.936572, -3.965561, -3.443717, -3.088965, -2.607161, -2.269970, -2.007248, -1.781236, -1.562728, -1.277843, -1.075661, -0.794612, -0.332836, 0.143736, 0.799089, 1.346018, 1.928431, 2.614430, 3.120115}},
    {12, -1,
     {-8.430613, -7.228952, -6.071700, -5.351124, -4.709944, -3.914102, -3.348487, -2.808592, -2.507968, -2.291963, -1.983192, -1.746394, -1.543555, -1.339600, -1.087200, -0.732151, -0.502739, -0.192993, 0.299339, 0.779075, 1.383349, 1.818505, 2.274930, 2.942619, 3.391589},
     {-10.875087, -9.784103, -8.445597, -7.325282, -6.299588, -5.115714, -4.317751, -3.605973, -3.206685, -2.939241, -2.555333, -2.279566, -2.060379, -1.864974, -1.668276, -1.410447, -1.221537, -0.971206, -0.539481, -0.129586, 0.423210, 0.868953, 1.324077, 1.951016, 2.427855}},
    {15, -1,
     {-6.463426, -6.007397, -5.285137, -4.724132, -4.207883, -3.635219, -3.185493, -2.750836, -2.483018, -2.285043, -2.002925, -1.778927, -1.576166, -1.368464, -1.119957, -0.783013, -0.560798, -0.272028, 0.182746, 0.616099, 1.159948, 1.585372, 1.973797, 2.507002, 2.853754},
     {-8.316063, -7.473050, -6.541230, -5.902442, -5.258043, -4.491801, -3.921570, -3.388347, -3.085645, -2.867946, -2.546507, -2.311701, -2.116182, -1.934253, -1.744952, -1.501052, -1.323758, -1.076954, -0.682507, -0.306633, 0.207080, 0.573367, 0.970462, 1.414249, 1.755566}},
    {20, -1,
     {-5.555093, -5.210492, -4.729048, -4.308905, -3.938298, -3.441725, -3.058540, -2.677884, -2.446571, -2.273618, -2.007732, -1.785429, -1.582833, -1.375710, -1.136302, -0.808369, -0.597373, -0.316319, 0.108661, 0.510114, 1.007437, 1.372067, 1.680894, 2.142599, 2.498005},
     {-6.557367, -6.086950, -5.520213, -5.047580, -4.628820, -4.083679, -3.681453, -3.277490, -3.026102, -2.843545, -2.576144, -2.364740, -2.176904, -2.000183, -1.808208, -1.565767, -1.396818, -1.162549, -0.778337, -0.427417, 0.011943, 0.342281, 0.691250, 1.131480, 1.390418}},
    {25, -1,
     {-5.177854, -4.856559, -4.464558, -4.107599, -3.798707, -3.367564, -3.036825, -2.676528, -2.454159, -2.281108, -2.012263, -1.791325, -1.589154, -1.380754, -1.138739, -0.814223, -0.607558, -0.341985, 0.068525, 0.449562, 0.926986, 1.255965, 1.597713, 2.006974, 2.337131},
     {-5.948728, -5.630424, -5.160855, -4.794590, -4.432774, -3.971692, -3.627624, -3.256067, -3.035969, -2.865517, -2.603574, -2.401079, -2.214885, -2.034001, -1.840873, -1.601746, -1.439572, -1.207786, -0.846742, -0.516002, -0.107519, 0.182585, 0.457093, 0.835135, 1.118019}},
    {30, -1,
     {-5.147466, -4.782076, -4.376851, -4.035039, -3.737315, -3.332215, -2.995374, -2.658438, -2.442768, -2.278255, -2.015898, -1.800806, -1.602256, -1.396213, -1.154565, -0.832666, -0.623036, -0.350672, 0.076686, 0.467941, 0.944156, 1.300063, 1.631512, 2.075153, 2.317302},
     {-5.845912, -5.502371, -5.023307, -4.693775, -4.334213, -3.898635, -3.562871, -3.214145, -2.996778, -2.836834, -2.593991, -2.396148, -2.220721, -2.047427, -1.858582, -1.623826, -1.461299, -1.236282, -0.865489, -0.525138, -0.105010, 0.204163, 0.484225, 0.850950, 1.063277}},
    {40, -1,
     {-4.806883, -4.527774, -4.190958, -3.936156, -3.643177, -3.271227, -2.978614, -2.650663, -2.438796, -2.276256, -2.015733, -1.801448, -1.600366, -1.392572, -1.155587, -0.839374, -0.637149, -0.373485, 0.031794, 0.408507, 0.851884, 1.182478, 1.517720, 1.883128, 2.111626},
     {-5.351434, -5.046981, -4.713814, -4.460549, -4.197221, -3.838564, -3.534391, -3.214267, -3.012202, -2.857485, -2.619802, -2.422948, -2.241693, -2.062309, -1.868230, -1.630626, -1.473081, -1.253058, -0.898583, -0.568008, -0.169609, 0.115858, 0.411794, 0.801282, 1.139337}},
    {50, -1,
     {-4.551973, -4.370992, -4.081566, -3.846846, -3.613021, -3.262429, -2.968612, -2.646675, -2.439171, -2.276915, -2.016949, -1.800175, -1.596892, -1.391711, -1.154675, -0.850519, -0.649941, -0.383557, 0.012027, 0.357876, 0.804816, 1.109118, 1.408461, 1.834764, 2.045107},
     {-5.224289, -5.019347, -4.641748, -4.384688, -4.143884, -3.800138, -3.520268, -3.219409, -3.023906, -2.871435, -2.629956, -2.429954, -2.243852, -2.062446, -1.868934, -1.629130, -1.469757, -1.258490, -0.908850, -0.595906, -0.206850, 0.077681, 0.333475, 0.635680, 0.934788}},
    {60, -1,
     {-4.633487, -4.429284, -4.094937, -3.845546, -3.598847, -3.239131, -2.958374, -2.638903, -2.435474, -2.272529, -2.014655, -1.795969, -1.590706, -1.388466, -1.152999, -0.852449, -0.650871, -0.391245, 0.009842, 0.353263, 0.760512, 1.056942, 1.316934, 1.636819, 1.893570},
     {-5.084388, -4.891623, -4.594876, -4.377224, -4.148581, -3.814522, -3.538031, -3.232466, -3.034841, -2.880432, -2.638009, -2.435205, -2.248756, -2.063474, -1.866594, -1.630643, -1.475086, -1.257748, -0.919190, -0.597947, -0.235510, 0.024054, 0.254218, 0.544072, 0.801162}},
    {80, -1,
     {-4.468761, -4.281208, -4.005025, -3.803181, -3.570248, -3.231629, -2.947387, -2.631078, -2.427023, -2.263908, -2.007527, -1.793240, -1.590013, -1.385522, -1.153011, -0.854448, -0.656998, -0.402609, -0.017838, 0.313201, 0.718808, 0.986930, 1.285106, 1.661452, 1.923142},
     {-5.043239, -4.826282, -4.535650, -4.325936, -4.107096, -3.784792, -3.522446, -3.227934, -3.030922, -2.876918, -2.632167, -2.428948, -2.238794, -2.054030, -1.856991, -1.622679, -1.474337, -1.265300, -0.935281, -0.625019, -0.257775, -0.018850, 0.252779, 0.573694, 0.810894}},
    {100, -1,
     {-4.540875, -4.295695, -4.004332, -3.783640, -3.548253, -3.214831, -2.938882, -2.625217, -2.417230, -2.257294, -1.999156, -1.785324, -1.583907, -1.380676, -1.156437, -0.858180, -0.668397, -0.415808, -0.037220, 0.299278, 0.699726, 0.982083, 1.237677, 1.605765, 1.847850},
     {-5.002822, -4.798887, -4.539050, -4.333488, -4.108444, -3.783253, -3.514149, -3.215251, -3.017151, -2.865640, -2.620835, -2.420286, -2.231283, -2.049455, -1.855156, -1.617956, -1.460286, -1.259478, -0.930199, -0.626828, -0.253487, 0.002494, 0.230396, 0.547846, 0.771152}},
    {150, -1,
     {-4.363057, -4.214807, -3.953971, -3.741695, -3.515661, -3.188155, -2.917885, -2.617508, -2.408846, -2.251153, -2.001572, -1.789472, -1.588427, -1.384138, -1.157005, -0.864807, -0.673138, -0.424958, -0.047139, 0.285028, 0.680973, 0.963845, 1.224298, 1.576023, 1.750726},
     {-4.951176, -4.760347, -4.501052, -4.286040, -4.084740, -3.771419, -3.515848, -3.216080, -3.022167, -2.870279, -2.626419, -2.419728, -2.233922, -2.048977, -1.848406, -1.614793, -1.463915, -1.260254, -0.927844, -0.633255, -0.272558, -0.016174, 0.221865, 0.503200, 0.719321}},
    {200, -1,
     {-4.487273, -4.255593, -3.956497, -3.743751, -3.516278, -3.200820, -2.920446, -2.610647, -2.401808, -2.246483, -1.996229, -1.778217, -1.581271, -1.380864, -1.157438, -0.869401, -0.679071, -0.430528, -0.046368, 0.277031, 0.669718, 0.947568, 1.192220, 1.468920, 1.682752},
     {-4.895932, -4.748415, -4.493298, -4.309292, -4.080562, -3.762310, -3.498483, -3.206884, -3.010120, -2.854734, -2.615492, -2.413439, -2.225415, -2.041576, -1.847919, -1.614077, -1.464562, -1.265510, -0.948465, -0.662547, -0.312641, -0.050663, 0.174384, 0.444511, 0.659713}},
};

inline constexpr LlcFactorRow kLlcFactors[] = {
    {6, 0, -1.689738, 2.931675, kUrNaN, kUrNaN},
    {6, 1, -24.637285, 1296.509559, kUrNaN, kUrNaN},
    {6, 2, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {6, 3, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {6, 4, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {7, 0, -1.435897, 1.920091, -1.635684, 5.039116},
    {7, 1, -2.252087, 11.446160, -17.229226, 656.274973},
    {7, 2, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {7, 3, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {7, 4, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {8, 0, -1.306236, 1.507276, -1.407193, 2.862855},
    {8, 1, -1.488240, 3.577471, -1.991818, 15.778889},
    {8, 2, -10.546739, 265.016627, kUrNaN, kUrNaN},
    {8, 3, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {8, 4, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {9, 0, -1.145941, 1.336877, -1.211517, 2.098883},
    {9, 1, -1.198090, 2.326452, -1.253837, 5.449057},
    {9, 2, -1.423431, 9.444435, -10.197277, 1541.542209},
    {9, 3, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {9, 4, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {10, 0, -1.041366, 1.214943, -1.094697, 1.817929},
    {10, 1, -1.047326, 1.820190, -1.038185, 3.280585},
    {10, 2, -0.979562, 3.520848, -1.022765, 13.259837},
    {10, 3, -35.566000, 5941.065316, kUrNaN, kUrNaN},
    {10, 4, kUrNaN, kUrNaN, kUrNaN, kUrNaN},
    {12, 0, -0.957594, 1.102502, -0.996304, 1.499715},
    {12, 1, -0.943311, 1.446906, -0.902835, 2.152353},
    {12, 2, -0.817880, 1.982650, -0.700489, 3.416182},
    {12, 3, -0.883150, 4.034357, -0.881655, 16.199182},
    {12, 4, -6.116910, 517.585015, kUrNaN, kUrNaN},
    {15, 0, -0.836539, 1.020941, -0.862931, 1.304215},
    {15, 1, -0.816726, 1.156439, -0.784093, 1.587110},
    {15, 2, -0.714052, 1.433306, -0.623316, 1.925669},
    {15, 3, -0.691211, 1.843656, -0.550473, 2.787651},
    {15, 4, -0.606405, 2.891126, -0.445907, 5.191613},
    {20, 0, -0.757474, 0.927068, -0.772320, 1.106784},
    {20, 1, -0.734133, 1.032256, -0.717727, 1.239154},
    {20, 2, -0.672508, 1.143273, -0.608934, 1.419781},
    {20, 3, -0.646259, 1.315766, -0.543508, 1.692450},
    {20, 4, -0.569402, 1.523594, -0.435755, 1.955265},
    {25, 0, -0.713454, 0.891715, -0.726661, 1.019989},
    {25, 1, -0.701023, 0.952334, -0.683194, 1.105454},
    {25, 2, -0.650229, 1.031930, -0.603204, 1.195316},
    {25, 3, -0.626764, 1.133923, -0.551051, 1.356010},
    {25, 4, -0.571456, 1.229666, -0.469976, 1.508674},
    {30, 0, -0.670068, 0.880118, -0.681401, 0.954531},
    {30, 1, -0.659757, 0.910224, -0.647101, 1.003258},
    {30, 2, -0.621395, 0.958206, -0.585847, 1.059291},
    {30, 3, -0.604235, 1.023717, -0.545095, 1.161034},
    {30, 4, -0.560072, 1.110461, -0.478752, 1.273629},
    {40, 0, -0.633689, 0.837081, -0.643449, 0.863840},
    {40, 1, -0.624705, 0.848962, -0.617232, 0.881258},
    {40, 2, -0.597673, 0.887840, -0.572110, 0.923560},
    {40, 3, -0.588075, 0.923329, -0.546175, 0.971848},
    {40, 4, -0.555648, 0.987962, -0.503380, 1.016524},
    {50, 0, -0.612061, 0.823888, -0.617618, 0.812725},
    {50, 1, -0.606028, 0.829563, -0.599308, 0.823538},
    {50, 2, -0.584008, 0.851204, -0.563720, 0.844776},
    {50, 3, -0.576943, 0.882643, -0.545860, 0.887377},
    {50, 4, -0.554011, 0.912809, -0.510977, 0.906258},
    {60, 0, -0.597796, 0.809380, -0.604809, 0.775430},
    {60, 1, -0.591828, 0.803996, -0.589016, 0.790993},
    {60, 2, -0.577234, 0.828359, -0.561822, 0.796976},
    {60, 3, -0.569427, 0.853984, -0.543766, 0.824065},
    {60, 4, -0.551141, 0.873647, -0.516008, 0.852201},
    {80, 0, -0.576576, 0.788167, -0.581384, 0.722537},
    {80, 1, -0.573029, 0.794281, -0.568670, 0.725428},
    {80, 2, -0.561591, 0.799163, -0.551176, 0.724789},
    {80, 3, -0.555617, 0.812040, -0.538816, 0.731586},
    {80, 4, -0.543433, 0.829894, -0.518373, 0.756354},
    {100, 0, -0.562593, 0.777657, -0.568100, 0.696936},
    {100, 1, -0.561182, 0.775426, -0.558101, 0.686471},
    {100, 2, -0.551626, 0.777220, -0.544045, 0.705799},
    {100, 3, -0.547517, 0.793270, -0.534360, 0.688271},
    {100, 4, -0.538427, 0.789606, -0.519408, 0.704957},
    {150, 0, -0.549768, 0.746894, -0.551606, 0.646385},
    {150, 1, -0.548934, 0.757625, -0.545160, 0.652309},
    {150, 2, -0.542213, 0.758772, -0.536216, 0.654172},
    {150, 3, -0.538864, 0.759091, -0.529494, 0.648534},
    {150, 4, -0.533816, 0.770857, -0.520826, 0.644489},
    {200, 0, -0.537594, 0.726158, -0.539860, 0.619487},
    {200, 1, -0.536828, 0.743438, -0.536080, 0.625571},
    {200, 2, -0.532175, 0.746728, -0.528577, 0.615623},
    {200, 3, -0.530163, 0.756226, -0.523830, 0.606833},
    {200, 4, -0.527643, 0.742949, -0.516663, 0.612281},
};

}  // namespace detail
}  // namespace diag
}  // namespace panelkit
