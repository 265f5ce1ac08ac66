#pragma once

namespace emocue {

// Bundled word-vector table: 12 hand-designed semantic features per token
// (sadness, joy, intensity, vocal, gesture, face, downward, quiet, tears,
// breath, adverbial, social) with a tiny deterministic jitter so no two
// tokens tie exactly.
inline constexpr const char* kEmbeddingsText = R"EMB(152 12
cries 0.8952 -0.0005 0.3038 0.6981 -0.0021 0.2022 -0.0035 0.0008 1.0007 0.1050 0.0011 -0.0032
sobs 0.9506 -0.0037 0.4493 0.6550 0.0034 -0.0009 0.0020 -0.0023 0.9451 0.3008 0.0024 -0.0033
weeps 0.9047 -0.0010 0.2961 0.4504 0.0020 -0.0037 0.0033 0.2977 0.9002 0.0045 -0.0050 0.0007
wails 0.8451 -0.0006 0.7964 0.8508 -0.0022 0.0021 -0.0008 0.0035 0.6006 0.0049 0.0047 0.0004
laughs -0.0015 0.9528 0.3971 0.8014 -0.0043 0.0000 0.0044 -0.0013 0.0040 0.1983 -0.0003 -0.0046
chuckles 0.0019 0.6962 0.0033 0.5976 -0.0008 0.0035 0.0005 0.4049 -0.0026 0.0017 -0.0015 0.0042
giggles 0.0044 0.7988 -0.0042 0.7001 -0.0028 0.0015 -0.0014 0.2029 -0.0011 0.0033 -0.0019 0.0038
smiles 0.0030 0.8487 0.0017 -0.0027 -0.0042 0.5015 0.0044 0.3501 -0.0025 0.0032 -0.0016 0.3027
grins -0.0032 0.7525 -0.0046 0.0011 0.0041 0.5497 0.0027 -0.0016 0.0013 -0.0030 0.0030 0.2473
beams -0.0009 0.8034 -0.0023 0.0021 0.0019 0.3962 0.0005 0.0048 0.0046 -0.0011 0.0020 -0.0023
sighs 0.5042 -0.0015 0.0028 0.4971 0.0015 -0.0042 0.0001 0.4044 -0.0003 0.9040 -0.0040 0.0017
exhales 0.0033 -0.0024 0.0047 -0.0010 -0.0039 0.0004 -0.0025 0.3518 -0.0012 0.9531 -0.0011 0.0046
inhales -0.0028 0.0015 -0.0042 0.0002 0.0045 -0.0012 0.0031 -0.0026 0.0027 0.8970 -0.0011 0.0046
gasps -0.0037 0.0006 0.5549 0.4993 0.0036 -0.0021 0.0022 -0.0035 0.0008 0.7951 0.0037 -0.0006
groans 0.4967 0.0010 0.3953 0.6997 -0.0005 0.0038 -0.0019 0.0024 0.0012 -0.0045 0.0021 -0.0022
moans 0.5535 -0.0022 0.3521 0.6964 0.0008 -0.0049 -0.0006 0.0037 -0.0020 0.0023 -0.0045 0.0012
whispers -0.0009 0.0048 0.0005 0.6461 0.0018 -0.0025 0.0032 0.9489 0.0046 0.0003 -0.0023 0.2021
mutters 0.0005 0.0048 0.0019 0.5462 -0.0023 0.0020 -0.0009 0.6034 -0.0040 0.0003 -0.0014 0.0043
murmurs -0.0012 0.0045 0.0001 0.4958 -0.0040 0.0017 -0.0026 0.7031 0.0043 -0.0000 -0.0029 0.0014
whimpers 0.7014 -0.0029 0.0000 0.4957 -0.0014 0.0043 -0.0027 0.5029 0.3959 0.0016 0.0026 -0.0031
screams 0.2486 0.0029 0.9500 0.9543 -0.0042 0.0001 -0.0028 0.0015 0.0041 -0.0016 0.0040 -0.0003
yells -0.0038 0.0019 0.9048 0.9005 0.0034 -0.0009 0.0021 -0.0023 0.0007 -0.0036 0.0045 -0.0011
shouts 0.0030 -0.0027 0.8516 0.8459 -0.0043 0.0001 0.0044 -0.0013 -0.0025 0.0018 0.0041 -0.0003
sniffles 0.5964 0.0007 -0.0023 0.4021 0.0036 0.2479 0.0050 0.2993 0.6009 0.4952 0.0000 -0.0043
sniffs -0.0049 0.0008 0.0038 0.2995 -0.0021 0.3036 -0.0035 0.0022 0.2996 0.4953 -0.0029 0.0014
coughs -0.0039 0.0018 -0.0025 0.6032 0.0034 0.1990 0.0047 0.0004 0.0016 0.5973 0.0028 -0.0029
clears 0.0020 -0.0037 0.0006 0.5049 0.0048 0.2991 0.0034 -0.0023 -0.0035 0.5508 0.0043 -0.0001
swallows 0.0034 -0.0023 0.0048 -0.0009 0.1962 0.4005 -0.0025 0.3018 -0.0011 0.0032 0.0018 -0.0025
chokes 0.5046 0.0002 0.0032 0.4989 -0.0027 0.0030 -0.0041 0.0016 0.3000 0.5957 0.0040 -0.0017
stammers 0.2516 -0.0040 0.2030 0.4973 0.0044 -0.0013 -0.0042 0.0001 -0.0039 0.0005 -0.0021 0.0036
stutters 0.2030 -0.0027 0.2016 0.4959 0.0003 0.0046 -0.0011 0.0032 -0.0025 0.0018 -0.0041 0.0016
hums -0.0020 0.2037 -0.0006 0.4951 -0.0047 0.0010 -0.0034 0.5023 0.0035 -0.0008 0.0022 -0.0035
sings 0.0032 0.3975 0.0018 0.7962 0.0005 0.0048 -0.0009 0.0034 -0.0013 0.0030 -0.0017 0.0040
breathes -0.0050 -0.0007 0.0037 -0.0020 0.0023 -0.0034 0.0009 0.2952 -0.0005 0.9039 -0.0029 0.0028
nods -0.0025 0.0018 -0.0039 0.0004 0.7002 0.4045 0.1488 0.3532 0.0030 -0.0027 0.0004 0.4461
shakes 0.4473 0.0029 0.3486 0.0043 0.7500 0.1457 0.0014 -0.0029 0.0018 -0.0026 0.0040 -0.0017
trembles 0.4549 -0.0008 0.3035 -0.0022 0.5476 0.0019 -0.0038 0.2506 -0.0006 0.0037 0.0002 -0.0041
shivers 0.0024 -0.0033 0.0010 -0.0046 0.4952 -0.0005 0.0038 0.2981 -0.0031 0.0012 0.0038 -0.0006
shrugs -0.0046 -0.0003 -0.0032 0.0011 0.7027 -0.0030 0.0041 -0.0016 0.0009 -0.0048 0.0014 0.2971
fidgets 0.0022 -0.0035 0.2036 -0.0021 0.6049 -0.0007 -0.0037 0.0006 -0.0023 0.0020 0.0035 -0.0008
looks 0.0987 0.0031 -0.0026 0.0017 0.2460 0.3003 0.4546 -0.0011 0.0032 -0.0024 -0.0035 0.2022
stares -0.0013 0.0030 0.0001 0.0044 0.2460 0.3503 0.2973 0.0017 0.0042 -0.0015 -0.0027 0.0030
glances -0.0037 0.0020 -0.0023 0.0034 0.2536 0.3493 0.3050 0.0007 0.0019 -0.0025 0.0017 -0.0040
bites -0.0011 0.0045 0.2975 0.0032 0.5516 0.4973 0.0002 -0.0041 0.0034 -0.0010 -0.0028 0.0015
struggles 0.4499 0.0042 0.5985 0.0028 0.4526 -0.0031 0.0013 -0.0044 0.0044 -0.0013 -0.0034 0.0023
bursts -0.0010 0.0047 0.9004 0.3461 0.3963 0.0020 -0.0023 0.0033 0.0045 0.0002 -0.0006 0.0037
bangs -0.0016 0.0041 0.8470 0.3027 0.8956 0.0013 0.0042 -0.0001 0.0029 -0.0014 -0.0039 0.0004
slams -0.0041 0.0003 0.8473 0.0016 0.8032 -0.0025 0.0046 -0.0011 0.0004 0.0048 -0.0042 0.0015
pounds 0.0030 -0.0013 0.8044 0.0001 0.7458 0.0015 -0.0028 0.0028 -0.0025 0.0032 0.0016 -0.0041
flags 0.0016 -0.0027 0.0002 -0.0041 0.8044 0.0000 0.0030 -0.0013 -0.0029 0.0028 -0.0025 0.3018
waves -0.0027 0.0016 -0.0013 0.0030 0.8046 -0.0011 -0.0041 0.0002 0.0018 -0.0039 0.0017 0.3473
points 0.0043 0.0000 -0.0043 0.0014 0.7016 -0.0027 0.0029 -0.0014 -0.0002 -0.0045 0.0014 -0.0043
gestures -0.0036 0.0007 -0.0022 0.0021 0.8537 -0.0020 -0.0050 -0.0007 0.0009 -0.0048 0.0002 0.2959
frowns 0.5972 0.0029 -0.0041 0.0015 0.0045 0.6002 0.0031 -0.0012 0.0027 -0.0016 0.0013 -0.0043
winces 0.4996 -0.0048 0.3009 -0.0034 -0.0032 0.5025 -0.0018 0.0039 -0.0050 0.0007 0.0037 -0.0020
grimaces 0.4974 0.0031 -0.0012 0.0045 0.0002 0.5459 0.0016 -0.0028 0.0019 -0.0024 0.0036 -0.0021
blinks 0.0038 -0.0005 -0.0048 0.0009 0.2011 0.4968 0.0024 -0.0019 -0.0017 0.0040 0.0016 -0.0041
cringes 0.4502 -0.0042 -0.0012 0.0045 0.4029 0.2986 0.0015 -0.0028 -0.0043 0.0013 0.0019 -0.0038
clenches -0.0037 0.0020 0.4977 0.0034 0.5990 0.0047 0.0004 -0.0039 0.0008 -0.0035 0.0046 -0.0010
rubs 0.0035 -0.0022 0.0021 -0.0036 0.5007 0.2950 -0.0006 0.0037 -0.0020 0.0023 -0.0033 0.0024
wipes -0.0026 0.0017 -0.0040 0.0003 0.5046 0.2989 0.0032 -0.0025 0.3519 -0.0038 -0.0020 0.0037
covers 0.0019 -0.0038 0.0033 -0.0024 0.5046 0.3990 -0.0040 0.0003 -0.0036 0.0007 -0.0033 0.0024
buries 0.4002 0.0045 0.0016 -0.0041 0.4529 0.4973 0.4043 -0.0014 -0.0043 0.0000 -0.0049 0.0008
lowers 0.0014 -0.0043 0.0000 0.0043 0.4041 -0.0016 0.7028 0.2971 -0.0031 0.0012 -0.0048 0.0009
raises -0.0004 -0.0047 -0.0018 0.0039 0.4969 0.0025 -0.5045 0.0012 0.0041 -0.0002 -0.0004 0.0039
drops 0.0045 -0.0012 -0.0041 0.0002 0.4018 -0.0039 0.6031 -0.0025 0.0000 0.0043 -0.0048 0.0009
hangs 0.3022 -0.0021 0.0035 -0.0008 0.2994 -0.0049 0.6008 -0.0035 -0.0033 0.0024 0.0041 -0.0016
closes -0.0001 -0.0044 -0.0015 0.0042 0.3472 0.3529 -0.0042 0.3015 0.0044 0.0001 0.0042 -0.0015
opens 0.0003 -0.0040 0.0017 -0.0026 0.3476 0.3033 -0.0011 0.0046 0.0048 0.0005 0.0022 -0.0035
hesitates 0.2020 -0.0037 0.0006 0.0050 -0.0007 0.0036 -0.0021 0.5022 -0.0035 0.2008 -0.0008 0.0049
softly 0.0030 -0.0013 -0.7956 0.0001 0.0003 -0.0041 0.0016 0.8973 -0.0015 0.0042 0.4982 0.0026
gently 0.0041 -0.0002 -0.6973 -0.0016 -0.0032 0.0025 -0.0046 0.7511 -0.0004 -0.0047 0.5034 -0.0023
quietly 0.0028 -0.0015 -0.5986 -0.0029 0.0000 -0.0043 -0.0014 0.9543 -0.0017 0.0040 0.5011 -0.0046
faintly 0.0032 -0.0011 -0.7454 0.0003 -0.0040 0.0017 -0.0027 0.8030 -0.0023 0.0034 0.4974 0.0017
lightly 0.0044 0.0000 -0.5970 -0.0013 0.0016 -0.0027 0.0002 0.5459 -0.0011 0.0046 0.4993 0.0036
slightly -0.0048 -0.0005 -0.7034 0.0009 0.0024 -0.0032 0.0038 0.3481 -0.0003 0.0040 0.4957 0.0014
mildly 0.0027 -0.0016 -0.5986 -0.0029 -0.0045 0.0012 0.0041 -0.0002 -0.0028 0.0029 0.5017 -0.0040
weakly 0.2010 -0.0033 -0.6476 -0.0019 0.0038 -0.0005 -0.0048 0.4008 -0.0045 0.0012 0.4952 -0.0005
barely -0.0006 -0.0050 -0.8493 -0.0036 -0.0034 0.0023 -0.0020 0.0037 0.0039 -0.0004 0.4993 0.0036
somewhat 0.0028 -0.0029 -0.3486 -0.0043 -0.0045 -0.0002 0.0042 -0.0015 -0.0017 0.0026 0.4518 -0.0025
moderately 0.0044 -0.0013 0.0030 -0.0027 0.0016 -0.0041 0.0002 0.0045 -0.0001 0.0042 0.5041 -0.0003
fairly -0.0017 0.0040 -0.1031 0.0026 0.0011 -0.0033 -0.0003 -0.0046 0.0038 -0.0005 0.4541 -0.0016
rather -0.0019 0.0025 0.0968 0.0011 -0.0046 -0.0003 0.0040 -0.0017 0.0037 -0.0020 0.3984 0.0041
quite 0.0009 -0.0048 0.3022 -0.0035 0.0036 -0.0021 0.0050 -0.0007 -0.0047 -0.0003 0.4017 -0.0026
very 0.0029 -0.0028 0.6042 -0.0015 -0.0044 -0.0001 -0.0030 0.0013 -0.0017 0.0027 0.3484 0.0041
really 0.0022 -0.0021 0.5036 -0.0007 -0.0005 -0.0049 0.0008 -0.0035 -0.0033 0.0024 0.3454 -0.0003
heavily 0.0043 -0.0014 0.8529 -0.0028 0.0016 -0.0041 0.0002 0.0045 -0.0002 0.0041 0.4972 0.0029
deeply -0.0039 0.0018 0.8048 0.0005 0.0034 -0.0009 0.2520 -0.0023 0.0007 -0.0037 0.4975 0.0018
strongly -0.0023 0.0021 0.7491 0.0034 0.0005 0.0048 0.0019 -0.0038 0.0032 -0.0024 0.5049 0.0006
intensely 0.0028 -0.0015 0.9041 -0.0002 0.0000 -0.0043 0.0014 -0.0029 -0.0027 0.0030 0.4977 0.0020
loudly -0.0005 -0.0048 0.7009 0.3966 -0.0032 0.0025 -0.0019 -0.4462 0.0040 -0.0003 0.4998 0.0041
violently 0.0041 -0.0016 0.9527 -0.0030 0.3014 -0.0043 -0.0000 0.0043 -0.0004 0.0039 0.5038 -0.0005
extremely 0.0012 -0.0031 0.9499 -0.0045 -0.0015 0.0042 -0.0029 0.0028 -0.0033 0.0024 0.4487 0.0030
uncontrollably 0.2040 -0.0017 0.9454 -0.0003 0.0012 -0.0045 0.0026 -0.0031 -0.0005 0.0038 0.4484 0.0041
bitterly 0.5015 -0.0028 0.7001 -0.0042 0.0043 -0.0001 0.0029 -0.0014 -0.0040 0.0017 0.4988 0.0031
desperately 0.5018 -0.0039 0.8032 -0.0025 -0.0010 0.0034 0.0004 0.0047 -0.0037 0.0006 0.5042 -0.0002
profusely 0.0040 -0.0003 0.7954 0.0011 0.0013 -0.0031 0.0026 -0.0017 -0.0015 0.0042 0.4973 0.0016
slowly -0.0047 -0.0004 -0.3461 -0.0018 0.0025 -0.0032 0.0011 0.4454 -0.0002 0.0041 0.4961 0.0018
quickly -0.0034 0.0009 0.3452 -0.0005 0.2493 0.0037 -0.0020 0.0023 0.0021 -0.0036 0.4980 0.0037
nervously 0.3468 0.0025 0.2482 0.0039 0.3041 -0.0003 -0.0046 0.0011 0.0013 -0.0030 0.4960 0.0003
anxiously 0.3966 0.0009 0.2980 0.0023 -0.0006 0.0037 0.0007 -0.0050 0.0011 -0.0046 0.4956 0.0013
sadly 0.8000 -0.0043 0.0986 0.0043 -0.0028 0.0029 -0.0042 0.0015 -0.0045 0.0012 0.5020 -0.0037
happily 0.0037 0.7994 -0.0049 0.0008 -0.0036 0.0021 -0.0022 0.0035 -0.0008 0.0049 0.5010 -0.0047
warmly -0.0010 0.5033 -0.0024 0.0019 -0.0037 0.0006 0.0049 0.2992 0.0035 -0.0022 0.5042 0.2999
wearily 0.5046 0.0003 -0.3040 0.0017 0.0019 -0.0024 0.0033 -0.0011 0.0001 0.2958 0.4982 0.0025
down 0.4521 -0.0036 -0.1465 -0.0022 -0.0007 0.0036 0.9007 -0.0050 -0.0034 0.0009 0.0003 -0.0040
away 0.4510 -0.0047 -0.0004 0.0040 0.0538 -0.0019 0.6524 -0.0033 -0.0035 0.0008 -0.0033 0.0024
up 0.0043 -0.0000 0.0029 -0.0014 0.2015 -0.0028 -0.7998 -0.0042 -0.0012 0.0045 -0.0030 0.0013
aside -0.0004 0.0039 -0.0018 0.0025 0.1968 0.0011 0.3954 -0.0003 -0.0050 -0.0006 -0.0012 0.0045
head -0.0046 -0.0003 0.0040 -0.0017 0.1981 0.9025 -0.0032 0.0011 -0.0001 0.0042 0.0028 -0.0015
face 0.0038 -0.0005 0.0024 -0.0019 -0.0034 0.9522 -0.0048 0.0009 -0.0007 0.0050 -0.0027 0.0016
eyes -0.0026 0.0017 -0.0040 0.0003 0.0001 0.8045 -0.0012 0.0031 0.2529 -0.0028 0.0010 -0.0033
eye 0.0038 -0.0005 -0.0048 0.0009 -0.0034 0.7522 -0.0021 0.0036 0.1493 0.0050 -0.0026 0.0018
lip -0.0028 0.0029 -0.0014 0.0043 -0.0001 0.7956 0.0013 -0.0030 0.0017 -0.0026 -0.0043 0.0001
lips 0.0041 -0.0016 0.0028 -0.0029 -0.0031 0.8012 -0.0045 -0.0002 -0.0014 0.0029 -0.0036 0.0020
mouth -0.0031 0.0026 -0.0045 0.0012 -0.0004 0.7953 -0.0017 0.0040 0.0024 -0.0019 -0.0038 0.0006
nose -0.0035 0.0022 -0.0022 0.0035 -0.0008 0.7549 0.0006 -0.0037 0.0020 0.1977 0.0033 -0.0024
throat 0.0027 -0.0030 0.0013 0.3456 -0.0001 0.7042 -0.0015 0.0029 -0.0018 0.3025 -0.0022 0.0035
chin -0.0044 -0.0001 -0.0030 0.0013 -0.0017 0.7026 -0.0003 0.0040 0.0011 -0.0046 0.0032 -0.0011
brow -0.0046 -0.0003 0.0040 -0.0016 -0.0018 0.7025 -0.0032 0.0011 0.0009 -0.0048 0.0019 -0.0024
forehead -0.0043 0.0000 -0.0029 0.0014 0.0030 0.7473 0.0043 -0.0013 0.0002 0.0045 -0.0050 0.0007
cheek -0.0047 -0.0004 -0.0034 0.0010 0.0025 0.6968 0.0039 -0.0018 0.1998 0.0041 0.0016 -0.0028
cheeks -0.0031 0.0026 -0.0017 0.0040 -0.0003 0.6954 0.0011 -0.0032 0.2015 -0.0029 -0.0019 0.0024
hand -0.0009 0.0048 -0.0022 0.0034 0.6464 0.1521 -0.0050 0.0007 0.0036 -0.0007 0.0020 -0.0037
hands -0.0033 0.0011 -0.0019 0.0024 0.6495 0.1538 0.0009 -0.0048 0.0012 -0.0044 -0.0042 0.0015
fist 0.0026 -0.0031 0.5012 -0.0045 0.5998 0.0041 -0.0016 0.0028 -0.0019 0.0024 -0.0014 0.0043
fists -0.0012 0.0044 0.4974 0.0031 0.6015 -0.0028 0.0001 -0.0042 0.0043 -0.0001 -0.0009 0.0034
arms 0.0009 -0.0035 0.0022 -0.0021 0.6036 -0.0007 0.0050 0.0007 -0.0046 0.0010 -0.0016 0.0027
shoulders 0.0025 -0.0018 0.0039 -0.0005 0.4952 0.2009 0.1966 0.0023 -0.0020 0.0037 0.0013 -0.0044
tears 0.6954 0.0011 -0.0033 0.0024 0.0026 0.2483 0.0040 -0.0003 0.9509 -0.0034 -0.0029 0.0014
voice -0.0024 0.0020 -0.0010 0.8533 0.0004 0.0047 0.0018 -0.0039 0.0022 -0.0035 -0.0042 0.0015
breath -0.0026 0.0017 -0.0040 0.0003 0.0047 -0.0010 0.0033 -0.0024 0.0029 0.9472 0.0025 -0.0018
air 0.0048 -0.0009 0.0034 -0.0023 0.0020 -0.0037 0.0006 0.0050 0.0003 0.5546 0.0000 -0.0043
table 0.0019 -0.0038 0.1505 0.0048 0.2491 0.0034 -0.0022 0.0021 -0.0036 0.0007 0.0026 -0.0017
desk -0.0018 0.0039 0.0969 0.0026 0.1955 0.0012 0.0041 -0.0002 0.0037 -0.0006 0.0043 -0.0014
wall -0.0037 0.0006 0.1477 0.0020 0.2036 -0.0021 0.0049 -0.0007 0.0008 -0.0049 0.0020 -0.0023
floor 0.0007 -0.0050 0.0021 -0.0036 -0.0021 0.0023 0.5493 0.0036 -0.0038 0.0005 -0.0004 -0.0047
ground 0.0033 -0.0011 0.0046 0.0003 0.0005 -0.0038 0.5019 -0.0024 -0.0022 0.0034 0.0015 -0.0042
silence -0.0050 0.0007 0.0037 -0.0006 -0.0022 0.0035 -0.0036 0.9021 0.0005 -0.0038 0.0046 -0.0011
um 0.0034 -0.0023 0.0020 0.2963 0.0006 0.0049 -0.0008 0.3036 -0.0011 0.2032 0.0042 -0.0001
uh -0.0004 -0.0047 -0.0017 0.3040 -0.0031 0.0026 -0.0045 0.3012 -0.0049 0.2008 0.0013 -0.0044
er -0.0001 -0.0044 0.0013 0.2470 -0.0028 0.0029 -0.0015 0.3042 -0.0046 0.0011 -0.0005 0.0038
hmm 0.0023 -0.0034 0.0037 0.3480 -0.0049 -0.0006 -0.0035 0.4008 -0.0032 0.0012 -0.0025 0.0032
like -0.0031 0.0026 -0.0018 0.0039 0.0041 -0.0002 -0.0045 0.0012 0.0024 -0.0020 0.0026 0.2969
know -0.0049 0.0008 -0.0035 0.0022 -0.0021 0.0036 -0.0007 0.0050 0.0006 -0.0037 -0.0033 0.3510
mean -0.0026 0.0031 -0.0040 0.0017 0.0001 -0.0042 -0.0013 0.0044 0.0019 -0.0024 0.0024 0.2967
right -0.0046 -0.0003 -0.0032 0.0011 0.0027 -0.0030 0.0040 -0.0017 -0.0001 0.0042 -0.0036 0.3021
well 0.0019 -0.0038 0.0033 -0.0024 0.0047 -0.0010 -0.0040 0.0004 -0.0036 0.0007 0.0041 0.2998
okay 0.0034 0.0977 0.0047 -0.0009 -0.0039 0.0004 -0.0025 0.0018 -0.0021 0.0022 -0.0001 0.3456
yes 0.0007 -0.0036 -0.0007 -0.0050 -0.0020 0.0036 -0.0034 0.0023 -0.0048 0.0009 -0.0049 0.3495
no -0.0042 0.0015 -0.0029 0.0028 -0.0015 0.0042 -0.0001 -0.0044 0.0013 -0.0031 0.0010 0.2953
yeah -0.0027 0.0030 -0.0013 0.0044 0.0001 -0.0043 0.0014 -0.0029 0.0028 -0.0015 -0.0004 0.3539
)EMB";

} // namespace emocue
