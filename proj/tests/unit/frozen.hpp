// Copyright 2026 The scramble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Reference values computed once with scipy (dense expm / eigvalsh) and frozen.
// Model: open chain, g = -1.05, h = 0.5, gamma = 0.1 where dissipative.

#pragma once

#include <complex>

namespace frozen {

using C = std::complex<double>;

// Ground energy at three sites.
inline constexpr double kGroundEnergyN3 = -4.4428759713914605;

// Pauli coefficients of e^{-iH} Z1 e^{iH}, three sites.
inline constexpr double kHeisenbergZII = -0.04607163703905061;
inline constexpr double kHeisenbergYII = -0.29902345202199987;
inline constexpr double kHeisenbergZZI = 0.1923985496157209;

// rho(1) entries (0,0), (0,1), (1,2), (3,0) for rho0 = (I + 0.3 X1 + 0.2 Z2 + 0.1 YY) / 4.
inline const C kRhoPhase[4] = {{0.20960863441316818, 0.0},
                               {0.00758832312984771, -0.00038162275133730994},
                               {0.020903263754371213, 0.008665258927372507},
                               {0.033322852717986004, 0.04816477544074978}};
inline const C kRhoAmplitude[4] = {{0.16386217989006588, 0.0},
                                   {0.0276087584551961, -0.01619120351574201},
                                   {0.02755871272740076, 0.013300637399836154},
                                   {0.020549068038184192, 0.033827922527618424}};

// Three-site OTOC with A = Z3, B = Z1 at t = 0.5, 1, 2: pairs (f, f_identity).
struct OtocRow {
  double f[3];
  double f_identity[3];
};
inline constexpr OtocRow kOtocNone{{0.9998583798195876, 0.9374040485699207, -0.6978237002438774}, {1.0, 1.0, 1.0}};
inline constexpr OtocRow kOtocAmplitude{{0.8363004316853634, 0.6503185727157792, -0.251986820796691},
                                        {0.8364109743287118, 0.6881900776753368, 0.40401232070517223}};
inline constexpr OtocRow kOtocPhase{{0.9724484143105845, 0.8273122282253269, -0.41638175000646666},
                                    {0.9725704055700398, 0.8742588500140667, 0.6378036937031478}};
inline constexpr OtocRow kOtocDepolarizing{{0.9011078695121431, 0.7293400763301865, -0.3149811698603501},
                                           {0.9012238479320953, 0.7714090244116505, 0.493778519079749}};

// Six-site closed-chain OTOC with A = Z4, B = Z1 at t = 0.5, 1, 6.
inline constexpr double kOtocSixSite[3] = {0.9999999082795406, 0.9992686219338002, 0.031580407789227036};

}  // namespace frozen
