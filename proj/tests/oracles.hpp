#pragma once

// Reference values computed once with mpmath at 50 significant digits and
// frozen here. None of them is produced by the library under test.

namespace fup::oracle {

struct LnGamma {
  double x;
  double value;
};
inline constexpr LnGamma kLnGamma[] = {
    {0.1, 2.252712651734206},       {0.5, 0.57236494292470009},   {1.5, -0.12078223763524522},
    {2.5, 0.28468287047291916},     {7.9, 8.3242658680088089},    {8.0, 8.5251613610654143},
    {10.3, 13.482036786138357},     {60.0, 184.53382886144949},   {171.0, 706.57306224578735},
    {1000.5, 5908.6741758486775},   {1e6, 12815504.569147612},
};

struct GammaValue {
  double x;
  double value;
};
inline constexpr GammaValue kGamma[] = {
    {0.1, 9.5135076986687318},  {0.37, 2.4035500200786532},    {1.25, 0.90640247705547708},
    {3.7, 4.1706517837966032},  {9.5, 119292.46199460901},     {23.1, 1.5349165501415867e21},
    {41.9, 2.3050238787381353e49}, {60.0, 1.3868311854568984e80},
};

struct IncBeta {
  double x, a, b, value;
};
inline constexpr IncBeta kIncBeta[] = {
    {0.3, 2.5, 3.5, 0.2967529892956664},
    {0.01, 50.0, 0.2, 9.5864604555638391e-103},
    {0.5, 17.0, 17.0, 0.5},
    {0.999, 3.0, 0.6, 0.96705893832312391},
};

struct BetaPrime {
  long k;
  double alpha, y, cdf, sf;
};
inline constexpr BetaPrime kBetaPrime[] = {
    {1000, 0.5, 500.0, 0.1353351931932433, 0.8646648068067567},
    {1000, 0.5, 2000.0, 0.60630330386608761, 0.39369669613391239},
    {1000, 2.0, 250.0, 0.43308010113459807, 0.56691989886540193},
    {20, 0.3, 100.0, 0.59674676896268819, 0.40325323103731181},
};
inline constexpr double kBetaPrimeSmallCdf = 5.9999999520000004e-9;  // k=0, alpha=0.3, y=1e-8
inline constexpr double kBetaPrimeDeepCdf = 4.5060904073005339e-205;  // k=5000, alpha=1, y=10

struct IncGamma {
  double s, t;
  double lower;  // P(s,t); negative when only Q is frozen
  double upper;  // Q(s,t); negative when only P is frozen
};
inline constexpr IncGamma kIncGamma[] = {
    {3.0, 2.0, 0.32332358381693654, -1.0},
    {1000.5, 900.0, 0.00051948334593476637, -1.0},
    {1000.5, 1100.0, -1.0, 0.001115903432394033},
    {6561.0, 6400.0, 0.022748745247104985, -1.0},
    {0.5, 0.01, 0.11246291601828489, -1.0},
    {50.0, 80.0, -1.0, 0.00013078397659141034},
};

struct Hyp2F1 {
  double a, b, c, y, value;
};
inline constexpr Hyp2F1 kHyp2F1[] = {
    {7.6, 6.0, 7.0, 3.5, 6.1734523632998903e-5},
    {3.0, 2.0, 4.0, 100.0, 0.00027527957392865541},
    {21.6, 21.0, 22.0, 100.0, 3.0206894679875445e-42},
};

struct DiscEigen {
  int n;
  double R, alpha;
  long k;
  double value;
};
inline constexpr DiscEigen kDiscEigen[] = {
    {3, 2.0, 0.7, 5, 0.042542609661121036},
    {5, 15.588457268119896, 1.0, 10, 0.092339321868615078},  // R = 3^2.5
    {6, 729.0, 0.5, 0, 0.62227006832656075},
    {4, 0.25, 2.0, 3, 0.0072281765189937041},
    {2, 9.0, 1.5, 40, 0.091578312598600863},
};

struct FockEigen {
  int n;
  double R;
  long k;
  double value;
};
inline constexpr FockEigen kFockEigen[] = {
    {4, 2.0, 7, 0.12518162588631134},
    {1, 1.0, 0, 0.72901098562794992},
    {6, 3.0, 12, 0.039568626124973563},
};

struct Kernel {
  double zr, zi, wr, wi, alpha, re, im;
};
inline constexpr Kernel kWavelet[] = {
    {0.3, 1.2, -0.7, 0.4, 0.75, 0.06011275142549364, 0.34138523634128923},
    {2.0, 0.1, -3.0, 5.0, 1.3, -0.0035882866967845003, 0.0013090204390370999},
};
inline constexpr Kernel kBergman = {0.3, 0.5, -0.6, 0.2, 0.8, 0.47830582548173579, -0.52992517755261429};

inline constexpr double kGammaCoeff10Alpha03 = 4.666719895552;
inline constexpr double kGammaCoeff1000Alpha25 = 8459043543951.0;

}  // namespace fup::oracle
