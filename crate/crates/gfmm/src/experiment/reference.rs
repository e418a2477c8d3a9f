//! Reference results bundled for side-by-side comparison.
//!
//! Cross-validated CBA and box-count grids are averages over 10 repeats
//! of 4-fold cross-validation on the benchmark datasets; synthetic rows
//! come from a single train/test split. The reproduce command prints
//! fresh runs next to these values.

/// Traits of one benchmark dataset.
#[derive(Debug, Clone, Copy)]
pub struct DatasetInfo {
    pub name: &'static str,
    pub n_rows: usize,
    pub n_classes: usize,
    pub n_numeric: usize,
    pub n_categorical: usize,
}

pub const DATASETS: [DatasetInfo; 14] = [
    DatasetInfo { name: "abalone", n_rows: 4177, n_classes: 28, n_numeric: 7, n_categorical: 1 },
    DatasetInfo { name: "australian", n_rows: 690, n_classes: 2, n_numeric: 6, n_categorical: 8 },
    DatasetInfo { name: "cmc", n_rows: 1473, n_classes: 3, n_numeric: 2, n_categorical: 7 },
    DatasetInfo { name: "dermatology", n_rows: 358, n_classes: 6, n_numeric: 1, n_categorical: 33 },
    DatasetInfo { name: "flag", n_rows: 194, n_classes: 8, n_numeric: 10, n_categorical: 18 },
    DatasetInfo { name: "german", n_rows: 1000, n_classes: 2, n_numeric: 7, n_categorical: 13 },
    DatasetInfo { name: "heart", n_rows: 270, n_classes: 2, n_numeric: 7, n_categorical: 6 },
    DatasetInfo { name: "japanese credit", n_rows: 653, n_classes: 2, n_numeric: 6, n_categorical: 9 },
    DatasetInfo { name: "molecular biology", n_rows: 3190, n_classes: 3, n_numeric: 0, n_categorical: 60 },
    DatasetInfo { name: "nursery", n_rows: 12960, n_classes: 5, n_numeric: 0, n_categorical: 8 },
    DatasetInfo { name: "post operative", n_rows: 87, n_classes: 3, n_numeric: 1, n_categorical: 7 },
    DatasetInfo { name: "tae", n_rows: 151, n_classes: 3, n_numeric: 1, n_categorical: 4 },
    DatasetInfo { name: "tic tac toe", n_rows: 958, n_classes: 2, n_numeric: 0, n_categorical: 9 },
    DatasetInfo { name: "zoo", n_rows: 101, n_classes: 7, n_numeric: 1, n_categorical: 15 },
];

/// Datasets with at least one numeric and one categorical attribute.
pub const MIXED_DATASETS: [&str; 11] = [
    "abalone",
    "australian",
    "cmc",
    "dermatology",
    "flag",
    "german",
    "heart",
    "japanese credit",
    "post operative",
    "tae",
    "zoo",
];

pub const THETAS: [f64; 3] = [0.1, 0.7, 1.0];

/// Learner order used by every multi-learner grid below.
pub const LEARNERS: [&str; 3] = ["iol", "onln", "agglo2"];

/// Column labels of the per-learner grids: plain numeric features first,
/// then the eight encoders.
pub const ENCODER_COLUMNS: [&str; 9] = [
    "numeric-only", "catboost", "onehot", "loo", "label", "target",
    "jamesstein", "helmert", "sum",
];

/// One grid per learner: [dataset][theta][column]. None marks the
/// numeric-only column on datasets without numeric attributes.
pub type EncoderGrid = [[[Option<f64>; 9]; 3]; 14];

pub const CBA_IOL: EncoderGrid = [
    // abalone
    [
        [Some(0.11292), Some(0.1077), Some(0.11216), Some(0.08367), Some(0.11217), Some(0.11161), Some(0.11161), Some(0.11216), Some(0.11215)],
        [Some(0.10569), Some(0.11117), Some(0.04521), Some(0.04599), Some(0.07214), Some(0.0544), Some(0.0544), Some(0.04521), Some(0.03942)],
        [Some(0.10565), Some(0.11041), Some(0.03651), Some(0.05247), Some(0.07843), Some(0.07027), Some(0.07027), Some(0.02491), Some(0.02491)],
    ],
    // australian
    [
        [Some(0.64903), Some(0.79148), Some(0.6283), Some(0.70876), Some(0.77303), Some(0.77283), Some(0.77321), Some(0.62855), Some(0.79163)],
        [Some(0.68137), Some(0.81259), Some(0.63919), Some(0.60169), Some(0.79844), Some(0.80302), Some(0.80712), Some(0.63943), Some(0.80088)],
        [Some(0.67428), Some(0.72686), Some(0.36155), Some(0.45375), Some(0.38134), Some(0.63626), Some(0.64024), Some(0.36384), Some(0.36405)],
    ],
    // cmc
    [
        [Some(0.35198), Some(0.27015), Some(0.39891), Some(0.39403), Some(0.4124), Some(0.40797), Some(0.40849), Some(0.39891), Some(0.4095)],
        [Some(0.24655), Some(0.24563), Some(0.38885), Some(0.23629), Some(0.37042), Some(0.37329), Some(0.3739), Some(0.38885), Some(0.40109)],
        [Some(0.24698), Some(0.28563), Some(0.14279), Some(0.13443), Some(0.14279), Some(0.14482), Some(0.14482), Some(0.14301), Some(0.14301)],
    ],
    // dermatology
    [
        [Some(0.19315), Some(0.7371), Some(0.05674), Some(0.87801), Some(0.55851), Some(0.87721), Some(0.85747), Some(0.05674), Some(0.28197)],
        [Some(0.18473), Some(0.75532), Some(0.05674), Some(0.87791), Some(0.60397), Some(0.88038), Some(0.86116), Some(0.05674), Some(0.34796)],
        [Some(0.18473), Some(0.74119), Some(0.75364), Some(0.81876), Some(0.80716), Some(0.82864), Some(0.81965), Some(0.82665), Some(0.24084)],
    ],
    // flag
    [
        [Some(0.17956), Some(0.2597), Some(0.06655), Some(0.2218), Some(0.13868), Some(0.14268), Some(0.14573), Some(0.06655), Some(0.12138)],
        [Some(0.07375), Some(0.21977), Some(0.06655), Some(0.2205), Some(0.13571), Some(0.1382), Some(0.14176), Some(0.06655), Some(0.12031)],
        [Some(0.08515), Some(0.12787), Some(0.2391), Some(0.15268), Some(0.13549), Some(0.17076), Some(0.17001), Some(0.24299), Some(0.24084)],
    ],
    // german
    [
        [Some(0.50266), Some(0.57516), Some(0.35944), Some(0.57602), Some(0.5219), Some(0.58811), Some(0.5854), Some(0.35944), Some(0.46208)],
        [Some(0.49237), Some(0.54573), Some(0.35944), Some(0.57281), Some(0.51857), Some(0.59267), Some(0.59057), Some(0.35944), Some(0.43172)],
        [Some(0.38345), Some(0.3895), Some(0.38493), Some(0.40407), Some(0.37334), Some(0.36717), Some(0.36736), Some(0.35404), Some(0.35404)],
    ],
    // heart
    [
        [Some(0.70242), Some(0.76571), Some(0.6405), Some(0.71338), Some(0.69879), Some(0.67343), Some(0.69832), Some(0.64175), Some(0.68189)],
        [Some(0.68143), Some(0.74487), Some(0.66551), Some(0.72538), Some(0.69216), Some(0.69781), Some(0.72236), Some(0.66635), Some(0.6776)],
        [Some(0.6661), Some(0.64107), Some(0.32977), Some(0.42858), Some(0.47927), Some(0.55031), Some(0.54678), Some(0.32641), Some(0.32641)],
    ],
    // japanese credit
    [
        [Some(0.64746), Some(0.77653), Some(0.62878), Some(0.74217), Some(0.77063), Some(0.7745), Some(0.77262), Some(0.62878), Some(0.80086)],
        [Some(0.50108), Some(0.81413), Some(0.63782), Some(0.70741), Some(0.80831), Some(0.80203), Some(0.80616), Some(0.63782), Some(0.81319)],
        [Some(0.507), Some(0.70607), Some(0.36353), Some(0.44061), Some(0.49254), Some(0.5359), Some(0.54993), Some(0.36467), Some(0.36554)],
    ],
    // molecular biology
    [
        [None, Some(0.45006), Some(0.30092), Some(0.68158), Some(0.54743), Some(0.54642), Some(0.51235), Some(0.30092), Some(0.40823)],
        [None, Some(0.18284), Some(0.30092), Some(0.68161), Some(0.52217), Some(0.54689), Some(0.54447), Some(0.30092), Some(0.364)],
        [None, Some(0.38381), Some(0.17398), Some(0.39789), Some(0.47431), Some(0.27719), Some(0.22743), Some(0.17405), Some(0.17398)],
    ],
    // nursery
    [
        [None, Some(0.34878), Some(0.075), Some(0.773), Some(0.70924), Some(0.7625), Some(0.76726), Some(0.075), Some(0.45355)],
        [None, Some(0.34219), Some(0.075), Some(0.70922), Some(0.63043), Some(0.58198), Some(0.58197), Some(0.075), Some(0.55267)],
        [None, Some(0.34404), Some(0.3361), Some(0.41684), Some(0.42149), Some(0.49159), Some(0.49174), Some(0.3361), Some(0.3361)],
    ],
    // post operative
    [
        [Some(0.11457), Some(0.37532), Some(0.31386), Some(0.34674), Some(0.34483), Some(0.32674), Some(0.32082), Some(0.31386), Some(0.29886)],
        [Some(0.11196), Some(0.37125), Some(0.31386), Some(0.34063), Some(0.35297), Some(0.33419), Some(0.32633), Some(0.31386), Some(0.3535)],
        [Some(0.11196), Some(0.34648), Some(0.3423), Some(0.3623), Some(0.36426), Some(0.36205), Some(0.36685), Some(0.34087), Some(0.34087)],
    ],
    // tae
    [
        [Some(0.4206), Some(0.27737), Some(0.54896), Some(0.41787), Some(0.54959), Some(0.53362), Some(0.5414), Some(0.57858), Some(0.58822)],
        [Some(0.3786), Some(0.29342), Some(0.54896), Some(0.32724), Some(0.40225), Some(0.42256), Some(0.4233), Some(0.57922), Some(0.51246)],
        [Some(0.35701), Some(0.29217), Some(0.28113), Some(0.17504), Some(0.343), Some(0.22983), Some(0.28051), Some(0.31731), Some(0.28113)],
    ],
    // tic tac toe
    [
        [None, Some(0.40253), Some(0.32672), Some(0.86118), Some(0.49864), Some(0.84898), Some(0.84898), Some(0.32672), Some(0.50738)],
        [None, Some(0.21604), Some(0.32672), Some(0.85408), Some(0.52528), Some(0.85278), Some(0.85278), Some(0.32672), Some(0.61887)],
        [None, Some(0.21598), Some(0.32672), Some(0.34482), Some(0.32672), Some(0.32672), Some(0.32672), Some(0.32672), Some(0.32672)],
    ],
    // zoo
    [
        [Some(0.32125), Some(0.73326), Some(0.47723), Some(0.89851), Some(0.47723), Some(0.47723), Some(0.47723), Some(0.47723), Some(0.47723)],
        [Some(0.3366), Some(0.72461), Some(0.47723), Some(0.89851), Some(0.47723), Some(0.47723), Some(0.47723), Some(0.47723), Some(0.47723)],
        [Some(0.3366), Some(0.66473), Some(0.65154), Some(0.87506), Some(0.65154), Some(0.65154), Some(0.65154), Some(0.65154), Some(0.65154)],
    ],
];

pub const CBA_ONLN: EncoderGrid = [
    // abalone
    [
        [Some(0.10004), Some(0.09965), Some(0.10033), Some(0.0814), Some(0.10036), Some(0.09895), Some(0.09895), Some(0.10033), Some(0.10028)],
        [Some(0.08991), Some(0.08581), Some(0.06639), Some(0.05247), Some(0.06577), Some(0.07034), Some(0.07034), Some(0.06639), Some(0.0625)],
        [Some(0.07758), Some(0.07582), Some(0.05105), Some(0.07688), Some(0.07701), Some(0.07482), Some(0.07482), Some(0.04491), Some(0.04605)],
    ],
    // australian
    [
        [Some(0.6327), Some(0.78676), Some(0.78763), Some(0.72458), Some(0.77516), Some(0.77245), Some(0.76915), Some(0.78221), Some(0.78788)],
        [Some(0.55458), Some(0.7533), Some(0.79609), Some(0.64756), Some(0.75797), Some(0.75908), Some(0.75103), Some(0.79324), Some(0.7419)],
        [Some(0.55443), Some(0.55453), Some(0.36412), Some(0.44845), Some(0.55575), Some(0.55408), Some(0.55501), Some(0.36138), Some(0.3364)],
    ],
    // cmc
    [
        [Some(0.34733), Some(0.27229), Some(0.41127), Some(0.39216), Some(0.39799), Some(0.40479), Some(0.40407), Some(0.40834), Some(0.40817)],
        [Some(0.2482), Some(0.23055), Some(0.40242), Some(0.23354), Some(0.3471), Some(0.35562), Some(0.35584), Some(0.39933), Some(0.33361)],
        [Some(0.28774), Some(0.17663), Some(0.26102), Some(0.20724), Some(0.27998), Some(0.2403), Some(0.24978), Some(0.20009), Some(0.20009)],
    ],
    // dermatology
    [
        [Some(0.17821), Some(0.74153), Some(0.91816), Some(0.87285), Some(0.81443), Some(0.90731), Some(0.91314), Some(0.89044), Some(0.82078)],
        [Some(0.22802), Some(0.7586), Some(0.91816), Some(0.86979), Some(0.76419), Some(0.90753), Some(0.91433), Some(0.89148), Some(0.78283)],
        [Some(0.2117), Some(0.73634), Some(0.80096), Some(0.82877), Some(0.81512), Some(0.84336), Some(0.84563), Some(0.83134), Some(0.82784)],
    ],
    // flag
    [
        [Some(0.16828), Some(0.27844), Some(0.3093), Some(0.21592), Some(0.23665), Some(0.23821), Some(0.24238), Some(0.32434), Some(0.30266)],
        [Some(0.16308), Some(0.23876), Some(0.30852), Some(0.22097), Some(0.23928), Some(0.23859), Some(0.23902), Some(0.32482), Some(0.30187)],
        [Some(0.08513), Some(0.16479), Some(0.33115), Some(0.1655), Some(0.2258), Some(0.24862), Some(0.2496), Some(0.31175), Some(0.31892)],
    ],
    // german
    [
        [Some(0.51803), Some(0.5705), Some(0.62366), Some(0.58227), Some(0.57143), Some(0.60754), Some(0.60531), Some(0.60664), Some(0.59461)],
        [Some(0.48008), Some(0.5293), Some(0.62324), Some(0.57008), Some(0.55652), Some(0.5952), Some(0.59386), Some(0.60698), Some(0.53801)],
        [Some(0.37267), Some(0.34034), Some(0.3671), Some(0.39216), Some(0.43481), Some(0.43302), Some(0.44153), Some(0.36996), Some(0.41925)],
    ],
    // heart
    [
        [Some(0.71087), Some(0.7545), Some(0.72326), Some(0.73661), Some(0.72087), Some(0.72002), Some(0.72574), Some(0.72463), Some(0.72236)],
        [Some(0.57955), Some(0.73349), Some(0.71768), Some(0.73968), Some(0.73484), Some(0.72234), Some(0.72521), Some(0.71911), Some(0.72497)],
        [Some(0.56727), Some(0.53832), Some(0.41493), Some(0.39897), Some(0.55386), Some(0.56332), Some(0.53089), Some(0.47254), Some(0.55131)],
    ],
    // japanese credit
    [
        [Some(0.6435), Some(0.77653), Some(0.78821), Some(0.73311), Some(0.76791), Some(0.77982), Some(0.77077), Some(0.7828), Some(0.78296)],
        [Some(0.51997), Some(0.79721), Some(0.79636), Some(0.67081), Some(0.76299), Some(0.78029), Some(0.76888), Some(0.7927), Some(0.75449)],
        [Some(0.50419), Some(0.4973), Some(0.36442), Some(0.43013), Some(0.50609), Some(0.50356), Some(0.50225), Some(0.36794), Some(0.3483)],
    ],
    // molecular biology
    [
        [None, Some(0.44822), Some(0.59166), Some(0.6917), Some(0.65289), Some(0.72385), Some(0.55931), Some(0.63088), Some(0.58315)],
        [None, Some(0.17338), Some(0.59166), Some(0.68604), Some(0.62097), Some(0.72463), Some(0.57819), Some(0.63088), Some(0.52069)],
        [None, Some(0.17533), Some(0.27928), Some(0.22824), Some(0.36204), Some(0.22663), Some(0.2565), Some(0.28026), Some(0.28586)],
    ],
    // nursery
    [
        [None, Some(0.35394), Some(0.48235), Some(0.80087), Some(0.69927), Some(0.81021), Some(0.80965), Some(0.67591), Some(0.61398)],
        [None, Some(0.36542), Some(0.48235), Some(0.71201), Some(0.76323), Some(0.75024), Some(0.75005), Some(0.67591), Some(0.71592)],
        [None, Some(0.34221), Some(0.39265), Some(0.45448), Some(0.39261), Some(0.49749), Some(0.49749), Some(0.39265), Some(0.39271)],
    ],
    // post operative
    [
        [Some(0.24126), Some(0.3427), Some(0.29195), Some(0.36087), Some(0.31737), Some(0.32422), Some(0.31584), Some(0.31009), Some(0.30067)],
        [Some(0.11129), Some(0.3563), Some(0.28212), Some(0.37434), Some(0.31917), Some(0.33152), Some(0.33796), Some(0.29039), Some(0.33361)],
        [Some(0.11132), Some(0.36113), Some(0.15231), Some(0.37974), Some(0.17463), Some(0.22682), Some(0.23078), Some(0.14729), Some(0.30779)],
    ],
    // tae
    [
        [Some(0.32182), Some(0.29394), Some(0.5582), Some(0.39923), Some(0.54069), Some(0.53045), Some(0.53771), Some(0.55462), Some(0.56828)],
        [Some(0.23871), Some(0.23547), Some(0.55931), Some(0.30996), Some(0.41682), Some(0.39114), Some(0.40946), Some(0.55446), Some(0.45054)],
        [Some(0.23362), Some(0.16439), Some(0.27055), Some(0.22895), Some(0.21776), Some(0.26877), Some(0.28982), Some(0.29786), Some(0.28274)],
    ],
    // tic tac toe
    [
        [None, Some(0.41122), Some(0.36495), Some(0.86707), Some(0.51649), Some(0.8737), Some(0.8737), Some(0.59165), Some(0.60067)],
        [None, Some(0.17669), Some(0.36495), Some(0.85289), Some(0.70093), Some(0.87285), Some(0.87285), Some(0.59165), Some(0.64631)],
        [None, Some(0.20276), Some(0.32672), Some(0.30647), Some(0.17328), Some(0.27683), Some(0.27683), Some(0.32672), Some(0.32672)],
    ],
    // zoo
    [
        [Some(0.35016), Some(0.74672), Some(0.88185), Some(0.87976), Some(0.88185), Some(0.88185), Some(0.88185), Some(0.88185), Some(0.88185)],
        [Some(0.34626), Some(0.73941), Some(0.88185), Some(0.87976), Some(0.88185), Some(0.88185), Some(0.88185), Some(0.88185), Some(0.88185)],
        [Some(0.34626), Some(0.67923), Some(0.84003), Some(0.86851), Some(0.84177), Some(0.84177), Some(0.84177), Some(0.84177), Some(0.84177)],
    ],
];

pub const CBA_AGGLO2: EncoderGrid = [
    // abalone
    [
        [Some(0.11353), Some(0.10621), Some(0.11395), Some(0.08769), Some(0.11395), Some(0.11246), Some(0.11246), Some(0.11395), Some(0.11354)],
        [Some(0.11548), Some(0.11043), Some(0.0521), Some(0.04415), Some(0.05329), Some(0.05522), Some(0.05522), Some(0.0521), Some(0.0512)],
        [Some(0.11526), Some(0.11028), Some(0.03798), Some(0.0447), Some(0.04602), Some(0.05543), Some(0.05543), Some(0.02383), Some(0.02383)],
    ],
    // australian
    [
        [Some(0.6472), Some(0.78525), Some(0.63278), Some(0.72432), Some(0.77621), Some(0.77069), Some(0.76875), Some(0.63302), Some(0.79496)],
        [Some(0.68346), Some(0.8065), Some(0.64606), Some(0.6607), Some(0.80441), Some(0.80778), Some(0.79873), Some(0.6463), Some(0.80197)],
        [Some(0.69223), Some(0.70539), Some(0.36395), Some(0.47553), Some(0.69984), Some(0.70699), Some(0.69304), Some(0.36381), Some(0.36401)],
    ],
    // cmc
    [
        [Some(0.41026), Some(0.27321), Some(0.39802), Some(0.40026), Some(0.40733), Some(0.41583), Some(0.41479), Some(0.39802), Some(0.40956)],
        [Some(0.37227), Some(0.30572), Some(0.39559), Some(0.22961), Some(0.39287), Some(0.37092), Some(0.36989), Some(0.39559), Some(0.40044)],
        [Some(0.36737), Some(0.30877), Some(0.15786), Some(0.125), Some(0.16833), Some(0.18249), Some(0.18146), Some(0.14307), Some(0.14307)],
    ],
    // dermatology
    [
        [Some(0.19959), Some(0.74201), Some(0.05891), Some(0.87285), Some(0.55376), Some(0.87863), Some(0.85125), Some(0.05891), Some(0.27489)],
        [Some(0.20413), Some(0.75796), Some(0.05891), Some(0.8642), Some(0.64457), Some(0.87369), Some(0.85119), Some(0.05891), Some(0.33973)],
        [Some(0.18443), Some(0.6986), Some(0.76747), Some(0.82772), Some(0.81047), Some(0.81342), Some(0.81144), Some(0.8278), Some(0.78739)],
    ],
    // flag
    [
        [Some(0.16859), Some(0.27671), Some(0.06743), Some(0.21117), Some(0.13836), Some(0.14348), Some(0.14455), Some(0.06743), Some(0.11689)],
        [Some(0.10828), Some(0.23309), Some(0.06743), Some(0.21633), Some(0.13711), Some(0.14087), Some(0.14247), Some(0.06743), Some(0.11821)],
        [Some(0.07782), Some(0.1201), Some(0.24026), Some(0.16883), Some(0.13536), Some(0.18123), Some(0.18578), Some(0.24031), Some(0.24164)],
    ],
    // german
    [
        [Some(0.50842), Some(0.57044), Some(0.35948), Some(0.58139), Some(0.52209), Some(0.59107), Some(0.5911), Some(0.35948), Some(0.46808)],
        [Some(0.45241), Some(0.53), Some(0.35948), Some(0.57123), Some(0.5215), Some(0.57642), Some(0.57942), Some(0.35948), Some(0.45489)],
        [Some(0.3603), Some(0.36349), Some(0.36257), Some(0.40161), Some(0.3584), Some(0.36743), Some(0.36933), Some(0.35473), Some(0.35473)],
    ],
    // heart
    [
        [Some(0.70732), Some(0.75819), Some(0.66609), Some(0.74221), Some(0.70146), Some(0.69226), Some(0.69895), Some(0.66799), Some(0.69837)],
        [Some(0.67456), Some(0.75039), Some(0.68612), Some(0.73247), Some(0.71497), Some(0.69517), Some(0.71231), Some(0.68692), Some(0.72425)],
        [Some(0.60591), Some(0.66745), Some(0.43981), Some(0.47178), Some(0.63599), Some(0.57548), Some(0.57123), Some(0.3248), Some(0.3248)],
    ],
    // japanese credit
    [
        [Some(0.65402), Some(0.77353), Some(0.62633), Some(0.7316), Some(0.76647), Some(0.77308), Some(0.76658), Some(0.62633), Some(0.79655)],
        [Some(0.68221), Some(0.79921), Some(0.63494), Some(0.6695), Some(0.80336), Some(0.80737), Some(0.80655), Some(0.63494), Some(0.81081)],
        [Some(0.67237), Some(0.64501), Some(0.36984), Some(0.45877), Some(0.71463), Some(0.70686), Some(0.70532), Some(0.36641), Some(0.36751)],
    ],
    // molecular biology
    [
        [None, Some(0.44822), Some(0.29938), Some(0.6917), Some(0.54283), Some(0.55318), Some(0.51594), Some(0.29938), Some(0.40297)],
        [None, Some(0.19285), Some(0.29938), Some(0.68604), Some(0.5221), Some(0.55348), Some(0.54659), Some(0.29938), Some(0.37527)],
        [None, Some(0.17515), Some(0.17388), Some(0.50539), Some(0.51257), Some(0.47709), Some(0.49476), Some(0.17394), Some(0.17388)],
    ],
    // nursery
    [
        [None, Some(0.34731), Some(0.075), Some(0.80087), Some(0.71299), Some(0.80164), Some(0.80113), Some(0.075), Some(0.47804)],
        [None, Some(0.34164), Some(0.075), Some(0.66573), Some(0.68971), Some(0.62309), Some(0.62777), Some(0.075), Some(0.55395)],
        [None, Some(0.34178), Some(0.3361), Some(0.43984), Some(0.42239), Some(0.47154), Some(0.47942), Some(0.3361), Some(0.3361)],
    ],
    // post operative
    [
        [Some(0.1232), Some(0.34277), Some(0.31161), Some(0.36214), Some(0.32151), Some(0.3136), Some(0.30173), Some(0.31161), Some(0.29151)],
        [Some(0.22346), Some(0.37332), Some(0.31161), Some(0.35071), Some(0.34247), Some(0.33256), Some(0.31486), Some(0.31161), Some(0.34179)],
        [Some(0.25066), Some(0.36819), Some(0.33853), Some(0.36156), Some(0.3524), Some(0.36755), Some(0.37997), Some(0.33054), Some(0.33054)],
    ],
    // tae
    [
        [Some(0.42273), Some(0.30009), Some(0.53248), Some(0.40154), Some(0.55683), Some(0.53119), Some(0.53512), Some(0.56995), Some(0.58885)],
        [Some(0.41847), Some(0.29404), Some(0.53248), Some(0.2991), Some(0.41844), Some(0.41659), Some(0.40863), Some(0.56995), Some(0.52496)],
        [Some(0.40046), Some(0.29125), Some(0.26416), Some(0.19481), Some(0.3185), Some(0.33516), Some(0.36264), Some(0.30251), Some(0.26416)],
    ],
    // tic tac toe
    [
        [None, Some(0.41133), Some(0.32672), Some(0.86707), Some(0.5048), Some(0.85549), Some(0.85549), Some(0.32672), Some(0.51082)],
        [None, Some(0.1935), Some(0.32672), Some(0.85818), Some(0.51872), Some(0.85494), Some(0.85494), Some(0.32672), Some(0.62738)],
        [None, Some(0.18545), Some(0.32687), Some(0.39513), Some(0.55612), Some(0.42808), Some(0.42808), Some(0.32672), Some(0.32672)],
    ],
    // zoo
    [
        [Some(0.30623), Some(0.73382), Some(0.46568), Some(0.87976), Some(0.46568), Some(0.46568), Some(0.46568), Some(0.46568), Some(0.46568)],
        [Some(0.33709), Some(0.75117), Some(0.46568), Some(0.87976), Some(0.46568), Some(0.46568), Some(0.46568), Some(0.46568), Some(0.46568)],
        [Some(0.34716), Some(0.67512), Some(0.64447), Some(0.86851), Some(0.64447), Some(0.64447), Some(0.64447), Some(0.64447), Some(0.64447)],
    ],
];

pub const BOXES_IOL: EncoderGrid = [
    // abalone
    [
        [Some(1418.6), Some(1387.15), Some(704.55), Some(714.875), Some(704.7), Some(709.75), Some(709.75), Some(704.55), Some(704.65)],
        [Some(1523.175), Some(1432.4), Some(79.975), Some(343.575), Some(490.25), Some(244.725), Some(244.725), Some(79.975), Some(57.725)],
        [Some(1522.525), Some(1434.7), Some(43.75), Some(412.525), Some(502.95), Some(679.725), Some(679.725), Some(26.75), Some(26.75)],
    ],
    // australian
    [
        [Some(212.675), Some(460.575), Some(493.875), Some(468.075), Some(478.0), Some(472.7), Some(467.95), Some(493.875), Some(493.875)],
        [Some(44.975), Some(44.7), Some(330.475), Some(55.425), Some(70.475), Some(78.825), Some(63.35), Some(330.475), Some(55.0)],
        [Some(37.45), Some(27.375), Some(2.8), Some(5.15), Some(5.6), Some(8.875), Some(8.825), Some(2.0), Some(2.0)],
    ],
    // cmc
    [
        [Some(170.375), Some(627.875), Some(881.0), Some(781.275), Some(881.075), Some(790.075), Some(789.225), Some(881.0), Some(881.125)],
        [Some(259.55), Some(269.825), Some(497.675), Some(95.25), Some(90.7), Some(112.9), Some(113.125), Some(497.675), Some(118.4)],
        [Some(264.05), Some(532.85), Some(5.425), Some(58.8), Some(7.775), Some(66.95), Some(66.95), Some(3.0), Some(3.0)],
    ],
    // dermatology
    [
        [Some(121.925), Some(268.325), Some(268.5), Some(268.35), Some(268.5), Some(268.4), Some(268.4), Some(268.5), Some(268.5)],
        [Some(119.8), Some(67.6), Some(267.35), Some(126.225), Some(96.2), Some(152.175), Some(143.625), Some(267.35), Some(198.9)],
        [Some(119.8), Some(21.575), Some(6.0), Some(6.0), Some(6.0), Some(6.0), Some(6.0), Some(6.0), Some(8.0)],
    ],
    // flag
    [
        [Some(102.225), Some(144.975), Some(143.225), Some(142.4), Some(143.225), Some(142.625), Some(142.375), Some(143.225), Some(143.225)],
        [Some(23.5), Some(36.65), Some(140.975), Some(100.35), Some(123.75), Some(123.925), Some(122.2), Some(140.975), Some(125.825)],
        [Some(9.525), Some(10.05), Some(8.0), Some(8.925), Some(8.025), Some(8.05), Some(8.05), Some(8.0), Some(8.0)],
    ],
    // german
    [
        [Some(523.725), Some(747.175), Some(748.3), Some(748.0), Some(748.3), Some(748.1), Some(748.1), Some(748.3), Some(748.3)],
        [Some(32.625), Some(48.625), Some(739.2), Some(258.75), Some(250.1), Some(296.8), Some(294.75), Some(739.2), Some(285.1)],
        [Some(11.0), Some(12.575), Some(3.625), Some(7.325), Some(4.725), Some(7.275), Some(7.275), Some(2.0), Some(2.0)],
    ],
    // heart
    [
        [Some(181.175), Some(201.8), Some(199.3), Some(198.65), Some(199.3), Some(198.75), Some(198.8), Some(199.3), Some(199.3)],
        [Some(19.3), Some(35.675), Some(100.225), Some(57.95), Some(43.525), Some(76.675), Some(69.075), Some(100.225), Some(50.075)],
        [Some(11.55), Some(12.9), Some(3.575), Some(5.525), Some(6.625), Some(9.45), Some(9.45), Some(2.0), Some(2.0)],
    ],
    // japanese credit
    [
        [Some(209.525), Some(449.425), Some(468.4), Some(445.225), Some(454.125), Some(450.175), Some(445.3), Some(468.4), Some(468.4)],
        [Some(55.375), Some(43.1), Some(316.9), Some(63.225), Some(70.625), Some(89.75), Some(64.25), Some(316.9), Some(54.225)],
        [Some(48.875), Some(19.55), Some(2.65), Some(4.875), Some(5.65), Some(9.95), Some(9.825), Some(2.0), Some(2.0)],
    ],
    // molecular biology
    [
        [None, Some(1813.6), Some(2279.95), Some(2276.75), Some(2279.95), Some(2278.025), Some(2260.7), Some(2279.95), Some(2279.95)],
        [None, Some(57.775), Some(2279.95), Some(2249.225), Some(2017.7), Some(2250.5), Some(1609.625), Some(2279.95), Some(2083.175)],
        [None, Some(741.75), Some(3.0), Some(17.475), Some(9.25), Some(17.675), Some(31.175), Some(3.0), Some(3.0)],
    ],
    // nursery
    [
        [None, Some(767.9), Some(9720.0), Some(4562.325), Some(9720.0), Some(4591.05), Some(4541.425), Some(9720.0), Some(9720.0)],
        [None, Some(571.675), Some(9720.0), Some(306.625), Some(323.0), Some(306.975), Some(306.975), Some(9720.0), Some(399.575)],
        [None, Some(571.575), Some(5.0), Some(19.15), Some(27.325), Some(25.95), Some(25.9), Some(5.0), Some(5.0)],
    ],
    // post operative
    [
        [Some(7.0), Some(58.9), Some(59.25), Some(56.35), Some(59.25), Some(57.45), Some(57.75), Some(59.25), Some(59.25)],
        [Some(5.15), Some(12.95), Some(56.125), Some(15.4), Some(33.95), Some(33.2), Some(30.125), Some(56.125), Some(38.175)],
        [Some(5.125), Some(11.5), Some(3.7), Some(3.375), Some(5.175), Some(5.6), Some(5.425), Some(2.75), Some(2.75)],
    ],
    // tae
    [
        [Some(42.05), Some(103.0), Some(82.9), Some(71.975), Some(76.175), Some(75.45), Some(66.6), Some(82.9), Some(82.9)],
        [Some(42.7), Some(41.5), Some(76.075), Some(17.475), Some(19.85), Some(16.125), Some(14.225), Some(76.075), Some(15.65)],
        [Some(44.9), Some(42.825), Some(3.0), Some(38.6), Some(19.725), Some(7.025), Some(7.125), Some(3.0), Some(3.0)],
    ],
    // tic tac toe
    [
        [None, Some(225.575), Some(718.5), Some(639.45), Some(718.5), Some(644.475), Some(644.475), Some(718.5), Some(718.5)],
        [None, Some(66.7), Some(718.5), Some(253.7), Some(165.325), Some(258.375), Some(258.375), Some(718.5), Some(297.625)],
        [None, Some(127.85), Some(3.0), Some(16.8), Some(14.55), Some(22.825), Some(22.825), Some(2.0), Some(2.0)],
    ],
    // zoo
    [
        [Some(13.375), Some(69.975), Some(48.4), Some(47.725), Some(48.4), Some(48.4), Some(48.4), Some(48.4), Some(48.4)],
        [Some(12.725), Some(26.825), Some(45.025), Some(34.475), Some(45.025), Some(45.025), Some(45.025), Some(45.025), Some(45.025)],
        [Some(12.725), Some(8.825), Some(7.0), Some(7.0), Some(7.0), Some(7.0), Some(7.0), Some(7.0), Some(7.0)],
    ],
];

pub const BOXES_ONLN: EncoderGrid = [
    // abalone
    [
        [Some(490.6), Some(739.875), Some(708.25), Some(692.4), Some(708.175), Some(695.25), Some(695.25), Some(708.25), Some(708.15)],
        [Some(37.875), Some(48.775), Some(79.45), Some(56.6), Some(56.55), Some(56.6), Some(56.6), Some(79.45), Some(57.55)],
        [Some(26.75), Some(26.75), Some(26.75), Some(26.75), Some(26.75), Some(26.75), Some(26.75), Some(26.75), Some(26.75)],
    ],
    // australian
    [
        [Some(196.775), Some(459.9), Some(493.225), Some(467.625), Some(478.225), Some(473.325), Some(467.75), Some(493.225), Some(493.225)],
        [Some(11.525), Some(29.725), Some(330.6), Some(57.05), Some(70.925), Some(81.3), Some(66.275), Some(330.6), Some(54.925)],
        [Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0)],
    ],
    // cmc
    [
        [Some(115.4), Some(626.55), Some(881.525), Some(784.925), Some(881.525), Some(797.425), Some(794.95), Some(881.525), Some(881.575)],
        [Some(10.575), Some(24.075), Some(497.05), Some(92.225), Some(90.875), Some(108.45), Some(108.95), Some(497.05), Some(117.35)],
        [Some(3.0), Some(3.0), Some(3.0), Some(3.0), Some(3.0), Some(3.0), Some(3.0), Some(3.0), Some(3.0)],
    ],
    // dermatology
    [
        [Some(38.0), Some(268.25), Some(268.5), Some(268.375), Some(268.5), Some(268.375), Some(268.375), Some(268.5), Some(268.5)],
        [Some(7.725), Some(62.925), Some(267.425), Some(127.8), Some(96.4), Some(154.025), Some(147.05), Some(267.425), Some(199.075)],
        [Some(6.0), Some(6.0), Some(6.0), Some(6.0), Some(6.0), Some(6.0), Some(6.0), Some(6.0), Some(6.0)],
    ],
    // flag
    [
        [Some(101.95), Some(145.1), Some(143.2), Some(142.45), Some(143.2), Some(142.7), Some(142.45), Some(143.2), Some(143.2)],
        [Some(23.55), Some(37.175), Some(140.975), Some(101.425), Some(123.175), Some(123.35), Some(121.6), Some(140.975), Some(125.325)],
        [Some(8.0), Some(8.0), Some(8.0), Some(8.0), Some(8.0), Some(8.0), Some(8.0), Some(8.0), Some(8.0)],
    ],
    // german
    [
        [Some(523.05), Some(747.25), Some(748.225), Some(747.875), Some(748.225), Some(747.925), Some(747.9), Some(748.225), Some(748.225)],
        [Some(32.525), Some(48.575), Some(738.825), Some(260.275), Some(247.275), Some(313.4), Some(311.225), Some(738.825), Some(285.425)],
        [Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0)],
    ],
    // heart
    [
        [Some(181.2), Some(201.5), Some(199.1), Some(198.55), Some(199.1), Some(198.65), Some(198.7), Some(199.1), Some(199.1)],
        [Some(12.725), Some(31.825), Some(100.25), Some(57.4), Some(45.35), Some(76.85), Some(71.2), Some(100.25), Some(51.575)],
        [Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0)],
    ],
    // japanese credit
    [
        [Some(196.35), Some(449.825), Some(468.9), Some(445.225), Some(454.2), Some(452.075), Some(446.375), Some(468.9), Some(468.9)],
        [Some(12.3), Some(27.275), Some(317.5), Some(61.05), Some(71.725), Some(89.8), Some(65.575), Some(317.5), Some(55.375)],
        [Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0)],
    ],
    // molecular biology
    [
        [None, Some(1812.75), Some(2279.6), Some(2276.075), Some(2279.6), Some(2277.475), Some(2260.4), Some(2279.6), Some(2279.6)],
        [None, Some(26.725), Some(2279.6), Some(2248.1), Some(2021.45), Some(2250.025), Some(1621.8), Some(2279.6), Some(2083.4)],
        [None, Some(3.0), Some(3.0), Some(3.0), Some(3.0), Some(3.0), Some(3.0), Some(3.0), Some(3.0)],
    ],
    // nursery
    [
        [None, Some(528.75), Some(9720.0), Some(4456.275), Some(9720.0), Some(4484.275), Some(4410.225), Some(9720.0), Some(9720.0)],
        [None, Some(12.375), Some(9720.0), Some(307.525), Some(311.25), Some(307.925), Some(307.95), Some(9720.0), Some(383.025)],
        [None, Some(5.0), Some(5.0), Some(5.0), Some(5.0), Some(5.0), Some(5.0), Some(5.0), Some(5.0)],
    ],
    // post operative
    [
        [Some(7.0), Some(59.05), Some(59.225), Some(56.525), Some(59.225), Some(57.525), Some(57.925), Some(59.225), Some(59.225)],
        [Some(4.425), Some(8.5), Some(55.9), Some(14.45), Some(33.1), Some(32.75), Some(30.025), Some(55.9), Some(37.2)],
        [Some(2.75), Some(2.75), Some(2.75), Some(2.75), Some(2.75), Some(2.75), Some(2.75), Some(2.75), Some(2.75)],
    ],
    // tae
    [
        [Some(20.8), Some(103.175), Some(83.0), Some(72.8), Some(76.45), Some(75.4), Some(65.625), Some(83.0), Some(83.0)],
        [Some(4.625), Some(13.875), Some(76.0), Some(17.3), Some(19.825), Some(16.075), Some(14.1), Some(76.0), Some(15.45)],
        [Some(3.0), Some(3.0), Some(3.0), Some(3.0), Some(3.0), Some(3.0), Some(3.0), Some(3.0), Some(3.0)],
    ],
    // tic tac toe
    [
        [None, Some(223.375), Some(718.5), Some(636.825), Some(718.5), Some(639.125), Some(639.125), Some(718.5), Some(718.5)],
        [None, Some(12.0), Some(718.5), Some(254.1), Some(163.35), Some(260.475), Some(260.475), Some(718.5), Some(298.1)],
        [None, Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0), Some(2.0)],
    ],
    // zoo
    [
        [Some(13.375), Some(70.05), Some(48.4), Some(47.725), Some(48.4), Some(48.4), Some(48.4), Some(48.4), Some(48.4)],
        [Some(8.0), Some(25.875), Some(44.975), Some(33.65), Some(44.975), Some(44.975), Some(44.975), Some(44.975), Some(44.975)],
        [Some(7.0), Some(7.0), Some(7.0), Some(7.0), Some(7.0), Some(7.0), Some(7.0), Some(7.0), Some(7.0)],
    ],
];

pub const BOXES_AGGLO2: EncoderGrid = [
    // abalone
    [
        [Some(1262.35), Some(1347.525), Some(741.45), Some(740.4), Some(741.125), Some(740.975), Some(740.975), Some(741.45), Some(740.95)],
        [Some(1197.525), Some(1215.775), Some(78.75), Some(192.625), Some(84.0), Some(166.175), Some(166.175), Some(78.75), Some(56.375)],
        [Some(1197.0), Some(1214.95), Some(43.275), Some(195.425), Some(73.075), Some(164.425), Some(164.425), Some(26.75), Some(26.75)],
    ],
    // australian
    [
        [Some(220.05), Some(460.3), Some(493.2), Some(467.9), Some(478.2), Some(473.575), Some(467.9), Some(493.2), Some(493.2)],
        [Some(82.175), Some(55.325), Some(330.6), Some(58.3), Some(71.8), Some(82.15), Some(67.175), Some(330.6), Some(54.775)],
        [Some(78.375), Some(36.3), Some(2.95), Some(4.975), Some(9.4), Some(12.85), Some(11.15), Some(2.0), Some(2.0)],
    ],
    // cmc
    [
        [Some(171.375), Some(640.825), Some(880.475), Some(786.225), Some(880.7), Some(798.75), Some(795.875), Some(880.475), Some(880.65)],
        [Some(92.7), Some(152.25), Some(496.325), Some(92.5), Some(101.2), Some(108.325), Some(108.7), Some(496.325), Some(115.0)],
        [Some(91.15), Some(149.25), Some(11.625), Some(9.45), Some(12.125), Some(22.55), Some(24.775), Some(3.0), Some(3.0)],
    ],
    // dermatology
    [
        [Some(146.425), Some(268.25), Some(268.5), Some(268.375), Some(268.5), Some(268.375), Some(268.375), Some(268.5), Some(268.5)],
        [Some(146.425), Some(76.5), Some(267.425), Some(130.275), Some(104.175), Some(155.975), Some(149.3), Some(267.425), Some(198.75)],
        [Some(146.425), Some(28.2), Some(6.0), Some(6.0), Some(6.0), Some(6.0), Some(6.0), Some(6.0), Some(6.0)],
    ],
    // flag
    [
        [Some(101.95), Some(145.1), Some(143.2), Some(142.45), Some(143.2), Some(142.7), Some(142.45), Some(143.2), Some(143.2)],
        [Some(23.55), Some(38.95), Some(140.975), Some(101.425), Some(123.175), Some(123.4), Some(121.6), Some(140.975), Some(125.325)],
        [Some(9.7), Some(9.725), Some(8.0), Some(9.125), Some(8.05), Some(8.125), Some(8.125), Some(8.0), Some(8.0)],
    ],
    // german
    [
        [Some(526.725), Some(747.25), Some(748.225), Some(747.875), Some(748.225), Some(747.925), Some(747.9), Some(748.225), Some(748.225)],
        [Some(35.2), Some(66.95), Some(738.825), Some(274.975), Some(274.05), Some(325.275), Some(323.15), Some(738.825), Some(287.15)],
        [Some(5.1), Some(5.125), Some(5.05), Some(6.0), Some(8.175), Some(20.925), Some(20.6), Some(2.0), Some(2.0)],
    ],
    // heart
    [
        [Some(180.925), Some(201.5), Some(199.1), Some(198.55), Some(199.1), Some(198.65), Some(198.7), Some(199.1), Some(199.1)],
        [Some(21.425), Some(39.25), Some(100.075), Some(56.95), Some(46.475), Some(76.6), Some(70.925), Some(100.075), Some(51.7)],
        [Some(13.05), Some(20.275), Some(4.0), Some(6.775), Some(8.825), Some(15.3), Some(14.3), Some(2.0), Some(2.0)],
    ],
    // japanese credit
    [
        [Some(215.25), Some(450.05), Some(468.65), Some(445.375), Some(454.325), Some(452.075), Some(446.45), Some(468.65), Some(468.65)],
        [Some(81.45), Some(62.95), Some(317.5), Some(62.325), Some(71.825), Some(91.275), Some(67.05), Some(317.5), Some(55.55)],
        [Some(76.9), Some(45.35), Some(2.725), Some(5.575), Some(8.35), Some(14.875), Some(11.4), Some(2.0), Some(2.0)],
    ],
    // molecular biology
    [
        [None, Some(1818.325), Some(2279.6), Some(2276.075), Some(2279.6), Some(2277.475), Some(2260.4), Some(2279.6), Some(2279.6)],
        [None, Some(61.05), Some(2279.6), Some(2248.1), Some(2022.775), Some(2250.025), Some(1644.725), Some(2279.6), Some(2083.4)],
        [None, Some(40.225), Some(3.0), Some(140.725), Some(189.9), Some(234.55), Some(180.7), Some(3.0), Some(3.0)],
    ],
    // nursery
    [
        [None, Some(840.9), Some(9720.0), Some(4456.275), Some(9720.0), Some(4484.275), Some(4410.225), Some(9720.0), Some(9720.0)],
        [None, Some(314.175), Some(9720.0), Some(311.675), Some(394.85), Some(311.55), Some(311.575), Some(9720.0), Some(383.025)],
        [None, Some(310.275), Some(5.0), Some(14.675), Some(77.375), Some(43.8), Some(44.225), Some(5.0), Some(5.0)],
    ],
    // post operative
    [
        [Some(7.0), Some(59.025), Some(59.225), Some(56.525), Some(59.225), Some(57.525), Some(57.925), Some(59.225), Some(59.225)],
        [Some(18.9), Some(15.8), Some(55.9), Some(14.875), Some(32.9), Some(32.75), Some(30.075), Some(55.9), Some(37.2)],
        [Some(18.9), Some(12.95), Some(3.725), Some(3.6), Some(6.525), Some(8.7), Some(7.525), Some(2.75), Some(2.75)],
    ],
    // tae
    [
        [Some(51.05), Some(103.225), Some(83.0), Some(72.875), Some(76.425), Some(75.45), Some(65.65), Some(83.0), Some(83.0)],
        [Some(51.025), Some(37.925), Some(76.0), Some(16.9), Some(19.725), Some(16.0), Some(14.0), Some(76.0), Some(15.175)],
        [Some(51.025), Some(36.3), Some(3.0), Some(6.925), Some(13.475), Some(7.35), Some(7.6), Some(3.0), Some(3.0)],
    ],
    // tic tac toe
    [
        [None, Some(229.775), Some(718.5), Some(636.825), Some(718.5), Some(639.125), Some(639.125), Some(718.5), Some(718.5)],
        [None, Some(27.975), Some(718.5), Some(255.45), Some(224.975), Some(261.35), Some(261.35), Some(718.5), Some(298.1)],
        [None, Some(19.125), Some(23.05), Some(22.875), Some(69.625), Some(57.325), Some(57.325), Some(2.0), Some(2.0)],
    ],
    // zoo
    [
        [Some(13.375), Some(70.05), Some(48.4), Some(47.725), Some(48.4), Some(48.4), Some(48.4), Some(48.4), Some(48.4)],
        [Some(14.6), Some(26.15), Some(44.975), Some(33.65), Some(44.975), Some(44.975), Some(44.975), Some(44.975), Some(44.975)],
        [Some(14.6), Some(9.15), Some(7.0), Some(7.0), Some(7.0), Some(7.0), Some(7.0), Some(7.0), Some(7.0)],
    ],
];

/// Mean rank of each encoder over the 14 datasets. Ranks are assigned
/// jointly across the 24 learner and encoder pairs at each theta, then
/// averaged per encoder for each learner. Rows follow
/// ENCODER_COLUMNS[1..]; columns are [theta][learner].
pub const ENCODER_MEAN_RANKS: [[[f64; 3]; 3]; 8] = [
    [[12.4643, 13.2857, 13.1071], [11.9286, 14.1429, 12.3571], [9.7857, 15.3571, 11.2857]], // catboost
    [[19.3214, 8.2857, 19.6429], [19.25, 8.7143, 18.8929], [17.25, 13.6786, 16.9286]], // one-hot
    [[11.5, 11.4643, 10.8929], [11.5, 10.7857, 12.3571], [12.0714, 10.8929, 11.4643]], // loo
    [[12.1786, 11.6071, 12.9643], [12.8929, 10.0357, 12.8214], [11.5714, 10.8571, 10.0357]], // label
    [[11.6071, 7.9643, 10.8214], [10.8929, 8.25, 10.9643], [10.9643, 9.25, 7.8929]], // target
    [[11.3929, 8.8929, 11.8214], [10.75, 8.1071, 12.1071], [10.8214, 8.5357, 7.8214]], // james-stein
    [[18.6786, 8.1429, 18.6429], [18.8214, 8.2143, 18.4643], [16.3214, 12.0714, 17.25]], // helmert
    [[13.25, 9.0357, 13.0357], [13.6071, 11.1786, 12.9643], [17.8929, 11.4643, 18.5357]], // sum
];

/// Column labels of STACKED_CBA: stacking scheme, then level-1 learner.
pub const STACKED_COLUMNS: [&str; 6] = [
    "a-iol", "a-onln", "a-agglo2", "b-iol", "b-onln", "b-agglo2",
];

/// Stacked model CBA: [dataset][theta][column], datasets follow
/// MIXED_DATASETS.
pub const STACKED_CBA: [[[f64; 6]; 3]; 11] = [
    // abalone
    [
        [0.11361, 0.09824, 0.113, 0.08055, 0.07177, 0.07246],
        [0.10184, 0.08582, 0.11122, 0.08134, 0.0859, 0.07317],
        [0.10181, 0.07964, 0.11101, 0.08139, 0.08496, 0.07326],
    ],
    // australian
    [
        [0.64799, 0.65996, 0.6472, 0.78075, 0.79729, 0.79729],
        [0.805, 0.81329, 0.79009, 0.77286, 0.7992, 0.79932],
        [0.80514, 0.81278, 0.79746, 0.77889, 0.80049, 0.79685],
    ],
    // cmc
    [
        [0.36337, 0.35888, 0.38098, 0.32213, 0.30309, 0.34213],
        [0.36104, 0.36663, 0.35744, 0.26127, 0.30097, 0.34299],
        [0.36103, 0.35868, 0.35762, 0.25571, 0.33365, 0.34577],
    ],
    // dermatology
    [
        [0.90303, 0.90101, 0.90101, 0.8788, 0.88774, 0.86889],
        [0.89813, 0.90164, 0.90164, 0.87792, 0.87515, 0.87924],
        [0.90753, 0.90332, 0.90387, 0.87698, 0.87457, 0.86253],
    ],
    // flag
    [
        [0.266, 0.26786, 0.27827, 0.25315, 0.22967, 0.23285],
        [0.38073, 0.38608, 0.38878, 0.26104, 0.25683, 0.24922],
        [0.38043, 0.38471, 0.38628, 0.26812, 0.25877, 0.24748],
    ],
    // german
    [
        [0.50266, 0.51803, 0.50842, 0.39254, 0.41077, 0.40617],
        [0.59281, 0.58426, 0.58243, 0.392, 0.41368, 0.39534],
        [0.5928, 0.58445, 0.58296, 0.37372, 0.38033, 0.36233],
    ],
    // heart
    [
        [0.70242, 0.71087, 0.70732, 0.66613, 0.65367, 0.65257],
        [0.681, 0.6995, 0.65627, 0.65744, 0.69059, 0.63891],
        [0.70491, 0.70852, 0.71184, 0.65591, 0.67823, 0.66959],
    ],
    // japanese credit
    [
        [0.64618, 0.66232, 0.65406, 0.79677, 0.78211, 0.78211],
        [0.81046, 0.80731, 0.77234, 0.79118, 0.78223, 0.77457],
        [0.81, 0.80533, 0.78587, 0.78703, 0.7882, 0.77988],
    ],
    // post operative
    [
        [0.36683, 0.35085, 0.35196, 0.35997, 0.36413, 0.36086],
        [0.34903, 0.33515, 0.33515, 0.357, 0.36098, 0.35505],
        [0.35247, 0.34001, 0.34244, 0.36621, 0.3669, 0.36592],
    ],
    // tae
    [
        [0.45862, 0.43821, 0.46762, 0.36725, 0.34162, 0.36735],
        [0.43642, 0.42311, 0.46459, 0.36916, 0.32399, 0.366],
        [0.46504, 0.41977, 0.46598, 0.36357, 0.31968, 0.36766],
    ],
    // zoo
    [
        [0.79643, 0.81792, 0.82232, 0.68632, 0.71226, 0.72411],
        [0.81839, 0.80923, 0.80762, 0.70272, 0.73968, 0.71959],
        [0.80417, 0.82161, 0.81881, 0.70274, 0.74266, 0.72418],
    ],
];

/// Mean ranks of the six stacked variants per theta, columns as in
/// STACKED_COLUMNS.
pub const STACKED_MEAN_RANKS: [[f64; 6]; 3] = [
    [2.7273, 2.8636, 2.5909, 4.2727, 4.3636, 4.1818],
    [2.1818, 2.2727, 3.1818, 4.6364, 4.0, 4.7273],
    [2.0909, 2.6364, 2.5455, 4.7273, 3.9091, 5.0909],
];

/// Column labels of the mixed-attribute learner rows.
pub const MIXED_COLUMNS: [&str; 6] = [
    "m1-eta-0.1", "m1-eta-0.7", "m1-eta-1", "m2-beta-25", "m2-beta-50",
    "m2-beta-75",
];

/// One row of the mixed-attribute learner grids.
#[derive(Debug, Clone, Copy)]
pub struct MixedRow {
    pub dataset: &'static str,
    /// None when the dataset has no numeric attributes and theta is moot.
    pub theta: Option<f64>,
    pub values: [f64; 6],
}

/// Mixed-attribute learner CBA, columns as in MIXED_COLUMNS.

pub const MIXED_CBA: [MixedRow; 36] = [
    MixedRow { dataset: "abalone", theta: Some(0.1), values: [0.10182, 0.10156, 0.1039, 0.10195, 0.10195, 0.10195] },
    MixedRow { dataset: "abalone", theta: Some(0.7), values: [0.09182, 0.08919, 0.07923, 0.08662, 0.08662, 0.08662] },
    MixedRow { dataset: "abalone", theta: Some(1.0), values: [0.08831, 0.08357, 0.0729, 0.08455, 0.08455, 0.08455] },
    MixedRow { dataset: "australian", theta: Some(0.1), values: [0.77345, 0.76536, 0.75532, 0.62766, 0.6276, 0.6425] },
    MixedRow { dataset: "australian", theta: Some(0.7), values: [0.7939, 0.69939, 0.62978, 0.54578, 0.53535, 0.50845] },
    MixedRow { dataset: "australian", theta: Some(1.0), values: [0.79382, 0.69821, 0.60577, 0.55546, 0.55456, 0.50156] },
    MixedRow { dataset: "cmc", theta: Some(0.1), values: [0.4003, 0.39828, 0.37507, 0.39889, 0.40054, 0.41933] },
    MixedRow { dataset: "cmc", theta: Some(0.7), values: [0.39879, 0.31526, 0.28304, 0.24961, 0.24822, 0.31226] },
    MixedRow { dataset: "cmc", theta: Some(1.0), values: [0.39603, 0.31665, 0.29373, 0.28774, 0.28759, 0.19917] },
    MixedRow { dataset: "dermatology", theta: Some(0.1), values: [0.89702, 0.88468, 0.87987, 0.80026, 0.80026, 0.80822] },
    MixedRow { dataset: "dermatology", theta: Some(0.7), values: [0.897, 0.87034, 0.86026, 0.51967, 0.51967, 0.53411] },
    MixedRow { dataset: "dermatology", theta: Some(1.0), values: [0.897, 0.87097, 0.85932, 0.45787, 0.45787, 0.51649] },
    MixedRow { dataset: "flag", theta: Some(0.1), values: [0.20758, 0.2098, 0.21106, 0.27048, 0.27417, 0.27848] },
    MixedRow { dataset: "flag", theta: Some(0.7), values: [0.20707, 0.21187, 0.22017, 0.28746, 0.2849, 0.25168] },
    MixedRow { dataset: "flag", theta: Some(1.0), values: [0.20722, 0.21272, 0.21607, 0.25298, 0.25797, 0.2513] },
    MixedRow { dataset: "german", theta: Some(0.1), values: [0.59853, 0.5947, 0.5906, 0.49704, 0.50612, 0.53338] },
    MixedRow { dataset: "german", theta: Some(0.7), values: [0.59975, 0.56437, 0.53981, 0.51698, 0.51199, 0.52676] },
    MixedRow { dataset: "german", theta: Some(1.0), values: [0.60161, 0.54852, 0.51234, 0.37304, 0.37304, 0.43286] },
    MixedRow { dataset: "heart", theta: Some(0.1), values: [0.72107, 0.72131, 0.73083, 0.7632, 0.75282, 0.74892] },
    MixedRow { dataset: "heart", theta: Some(0.7), values: [0.72325, 0.71335, 0.64509, 0.59566, 0.55006, 0.54566] },
    MixedRow { dataset: "heart", theta: Some(1.0), values: [0.72291, 0.71955, 0.60935, 0.56718, 0.53851, 0.53506] },
    MixedRow { dataset: "japanese credit", theta: Some(0.1), values: [0.77503, 0.7741, 0.75015, 0.65456, 0.64753, 0.67543] },
    MixedRow { dataset: "japanese credit", theta: Some(0.7), values: [0.798, 0.7099, 0.60187, 0.52062, 0.51952, 0.51664] },
    MixedRow { dataset: "japanese credit", theta: Some(1.0), values: [0.79766, 0.7024, 0.59146, 0.50578, 0.50578, 0.50519] },
    MixedRow { dataset: "molecular biology", theta: None, values: [0.54925, 0.53621, 0.4805, 0.43242, 0.43218, 0.17394] },
    MixedRow { dataset: "nursery", theta: None, values: [0.84465, 0.38292, 0.21174, 0.50402, 0.50402, 0.50402] },
    MixedRow { dataset: "post operative", theta: Some(0.1), values: [0.33633, 0.31583, 0.28579, 0.27155, 0.31368, 0.35604] },
    MixedRow { dataset: "post operative", theta: Some(0.7), values: [0.33491, 0.28111, 0.2672, 0.23059, 0.23783, 0.24881] },
    MixedRow { dataset: "post operative", theta: Some(1.0), values: [0.33491, 0.28598, 0.27953, 0.24144, 0.23603, 0.27637] },
    MixedRow { dataset: "tae", theta: Some(0.1), values: [0.54089, 0.49741, 0.43901, 0.48868, 0.52062, 0.53408] },
    MixedRow { dataset: "tae", theta: Some(0.7), values: [0.54286, 0.42037, 0.3789, 0.32134, 0.35273, 0.45906] },
    MixedRow { dataset: "tae", theta: Some(1.0), values: [0.53996, 0.39701, 0.3698, 0.31717, 0.3535, 0.44079] },
    MixedRow { dataset: "tic tac toe", theta: None, values: [0.85823, 0.8238, 0.49501, 0.44417, 0.44417, 0.44417] },
    MixedRow { dataset: "zoo", theta: Some(0.1), values: [0.55787, 0.55787, 0.67455, 0.86093, 0.86093, 0.86093] },
    MixedRow { dataset: "zoo", theta: Some(0.7), values: [0.6146, 0.6146, 0.61193, 0.7827, 0.7827, 0.78776] },
    MixedRow { dataset: "zoo", theta: Some(1.0), values: [0.6146, 0.6146, 0.57089, 0.7396, 0.7396, 0.73202] },
];

/// Box counts for the mixed-attribute learners.

pub const MIXED_BOXES: [MixedRow; 36] = [
    MixedRow { dataset: "abalone", theta: Some(0.1), values: [693.95, 591.725, 522.825, 704.15, 704.15, 704.15] },
    MixedRow { dataset: "abalone", theta: Some(0.7), values: [77.225, 56.875, 46.75, 79.375, 79.375, 79.375] },
    MixedRow { dataset: "abalone", theta: Some(1.0), values: [63.3, 45.275, 37.375, 65.275, 65.275, 65.275] },
    MixedRow { dataset: "australian", theta: Some(0.1), values: [472.15, 348.225, 222.6, 198.775, 206.05, 279.025] },
    MixedRow { dataset: "australian", theta: Some(0.7), values: [260.275, 95.825, 42.7, 11.675, 12.875, 21.875] },
    MixedRow { dataset: "australian", theta: Some(1.0), values: [253.25, 86.4, 35.725, 2.0, 2.675, 6.95] },
    MixedRow { dataset: "cmc", theta: Some(0.1), values: [880.95, 447.85, 202.325, 118.05, 127.05, 240.0] },
    MixedRow { dataset: "cmc", theta: Some(0.7), values: [496.325, 117.2, 38.675, 10.85, 11.775, 24.475] },
    MixedRow { dataset: "cmc", theta: Some(1.0), values: [471.1, 99.0, 28.8, 3.0, 3.025, 8.275] },
    MixedRow { dataset: "dermatology", theta: Some(0.1), values: [268.5, 212.65, 105.975, 38.65, 38.675, 71.2] },
    MixedRow { dataset: "dermatology", theta: Some(0.7), values: [267.375, 164.825, 68.025, 7.8, 7.8, 20.0] },
    MixedRow { dataset: "dermatology", theta: Some(1.0), values: [267.375, 163.85, 67.1, 6.0, 6.0, 19.05] },
    MixedRow { dataset: "flag", theta: Some(0.1), values: [143.2, 137.5, 107.825, 101.95, 105.075, 124.35] },
    MixedRow { dataset: "flag", theta: Some(0.7), values: [140.975, 123.3, 44.725, 23.55, 25.475, 49.5] },
    MixedRow { dataset: "flag", theta: Some(1.0), values: [140.675, 116.625, 34.2, 8.0, 9.65, 31.55] },
    MixedRow { dataset: "german", theta: Some(0.1), values: [747.925, 711.3, 549.55, 524.225, 547.45, 669.3] },
    MixedRow { dataset: "german", theta: Some(0.7), values: [726.225, 299.575, 115.225, 32.25, 36.375, 87.725] },
    MixedRow { dataset: "german", theta: Some(1.0), values: [714.925, 201.1, 69.575, 2.0, 2.125, 10.3] },
    MixedRow { dataset: "heart", theta: Some(0.1), values: [198.675, 197.475, 181.375, 181.225, 183.525, 188.5] },
    MixedRow { dataset: "heart", theta: Some(0.7), values: [92.05, 71.5, 16.9, 12.5, 13.4, 17.425] },
    MixedRow { dataset: "heart", theta: Some(1.0), values: [74.925, 53.625, 7.25, 2.0, 3.375, 4.85] },
    MixedRow { dataset: "japanese credit", theta: Some(0.1), values: [451.175, 340.15, 219.775, 198.65, 202.0, 233.25] },
    MixedRow { dataset: "japanese credit", theta: Some(0.7), values: [252.775, 95.675, 42.475, 12.35, 12.95, 15.775] },
    MixedRow { dataset: "japanese credit", theta: Some(1.0), values: [246.7, 87.475, 35.275, 2.0, 2.0, 4.425] },
    MixedRow { dataset: "molecular biology", theta: None, values: [2271.125, 2034.025, 1060.925, 3.9, 178.425, 1743.325] },
    MixedRow { dataset: "nursery", theta: None, values: [5434.325, 156.4, 33.075, 5.0, 5.0, 5.175] },
    MixedRow { dataset: "post operative", theta: Some(0.1), values: [58.575, 38.9, 13.2, 7.0, 9.05, 19.1] },
    MixedRow { dataset: "post operative", theta: Some(0.7), values: [55.1, 30.075, 8.7, 4.825, 5.175, 11.15] },
    MixedRow { dataset: "post operative", theta: Some(1.0), values: [55.05, 29.375, 7.475, 2.75, 3.95, 9.425] },
    MixedRow { dataset: "tae", theta: Some(0.1), values: [80.75, 47.15, 35.125, 22.125, 32.325, 68.775] },
    MixedRow { dataset: "tae", theta: Some(0.7), values: [70.55, 29.0, 21.55, 5.025, 6.95, 37.125] },
    MixedRow { dataset: "tae", theta: Some(1.0), values: [69.95, 28.425, 20.575, 3.025, 4.625, 33.325] },
    MixedRow { dataset: "tic tac toe", theta: None, values: [639.125, 239.275, 18.175, 2.0, 2.0, 2.05] },
    MixedRow { dataset: "zoo", theta: Some(0.1), values: [48.4, 48.4, 13.375, 13.375, 13.375, 14.5] },
    MixedRow { dataset: "zoo", theta: Some(0.7), values: [44.975, 44.975, 8.0, 8.0, 8.0, 8.55] },
    MixedRow { dataset: "zoo", theta: Some(1.0), values: [44.975, 44.975, 7.0, 7.0, 7.0, 7.25] },
];

/// Mean ranks of the six mixed-attribute settings per theta over all 14
/// datasets, columns as in MIXED_COLUMNS.
pub const MIXED_MEAN_RANKS: [[f64; 6]; 3] = [
    [2.5357, 3.6071, 3.8571, 4.1071, 3.8214, 3.0714],
    [1.6071, 2.6786, 3.8571, 4.2143, 4.5714, 4.0714],
    [1.6071, 2.8929, 3.7857, 4.0714, 4.2857, 4.3571],
];

/// Per-dataset ranks of the best setting from each family at one theta.
#[derive(Debug, Clone, Copy)]
pub struct BestMethodTable {
    pub theta: f64,
    /// What each of the eight ranked columns is.
    pub methods: [&'static str; 8],
    /// [dataset][method], datasets follow MIXED_DATASETS.
    pub ranks: [[f64; 8]; 11],
    pub mean_ranks: [f64; 8],
}

pub const BEST_METHOD_TABLES: [BestMethodTable; 3] = [
    BestMethodTable {
        theta: 0.1,
        methods: [
            "iol + james-stein encoding",
            "onln + target encoding",
            "agglo2 + target encoding",
            "stacked scheme A, iol",
            "stacked scheme A, onln",
            "stacked scheme A, agglo2",
            "m1, eta = 0.1",
            "m2, beta = 0.75r",
        ],
        ranks: [
            [4.0, 7.0, 3.0, 1.0, 8.0, 2.0, 6.0, 5.0], // abalone
            [2.0, 3.0, 4.0, 6.0, 5.0, 7.0, 1.0, 8.0], // australian
            [3.0, 4.0, 2.0, 7.0, 8.0, 6.0, 5.0, 1.0], // cmc
            [7.0, 1.0, 6.0, 2.0, 3.5, 3.5, 5.0, 8.0], // dermatology
            [7.0, 5.0, 8.0, 4.0, 3.0, 2.0, 6.0, 1.0], // flag
            [4.0, 1.0, 3.0, 8.0, 6.0, 7.0, 2.0, 5.0], // german
            [7.0, 3.0, 8.0, 6.0, 4.0, 5.0, 2.0, 1.0], // heart
            [4.0, 1.0, 3.0, 8.0, 6.0, 7.0, 2.0, 5.0], // japanese credit
            [7.0, 6.0, 8.0, 1.0, 4.0, 3.0, 5.0, 2.0], // post operative
            [1.0, 5.0, 4.0, 7.0, 8.0, 6.0, 2.0, 3.0], // tae
            [7.0, 1.0, 8.0, 5.0, 4.0, 3.0, 6.0, 2.0], // zoo
        ],
        mean_ranks: [4.818, 3.364, 5.182, 5.0, 5.409, 4.682, 3.818, 3.727],
    },
    BestMethodTable {
        theta: 0.7,
        methods: [
            "iol + james-stein encoding",
            "onln + james-stein encoding",
            "agglo2 + target encoding",
            "stacked scheme A, iol",
            "stacked scheme A, onln",
            "stacked scheme A, agglo2",
            "m1, eta = 0.1",
            "m2, beta = 0.75r",
        ],
        ranks: [
            [8.0, 6.0, 7.0, 2.0, 5.0, 1.0, 3.0, 4.0], // abalone
            [3.0, 7.0, 2.0, 4.0, 1.0, 6.0, 5.0, 8.0], // australian
            [2.0, 7.0, 3.0, 5.0, 4.0, 6.0, 1.0, 8.0], // cmc
            [7.0, 1.0, 6.0, 4.0, 2.5, 2.5, 5.0, 8.0], // dermatology
            [7.0, 5.0, 8.0, 3.0, 2.0, 1.0, 6.0, 4.0], // flag
            [4.0, 2.0, 7.0, 3.0, 5.0, 6.0, 1.0, 8.0], // german
            [3.0, 1.0, 5.0, 6.0, 4.0, 7.0, 2.0, 8.0], // heart
            [4.0, 7.0, 2.0, 1.0, 3.0, 6.0, 5.0, 8.0], // japanese credit
            [7.0, 2.0, 6.0, 1.0, 3.5, 3.5, 5.0, 8.0], // post operative
            [5.0, 8.0, 7.0, 4.0, 6.0, 2.0, 1.0, 3.0], // tae
            [7.0, 1.0, 8.0, 2.0, 3.0, 4.0, 6.0, 5.0], // zoo
        ],
        mean_ranks: [5.182, 4.273, 5.545, 3.182, 3.545, 4.091, 3.636, 6.545],
    },
    BestMethodTable {
        theta: 1.0,
        methods: [
            "iol + catboost encoding",
            "onln + james-stein encoding",
            "agglo2 + james-stein encoding",
            "stacked scheme A, iol",
            "stacked scheme A, onln",
            "stacked scheme A, agglo2",
            "m1, eta = 0.1",
            "m2, beta = 0.25r",
        ],
        ranks: [
            [2.0, 7.0, 8.0, 3.0, 6.0, 1.0, 4.0, 5.0], // abalone
            [5.0, 8.0, 6.0, 2.0, 1.0, 3.0, 4.0, 7.0], // australian
            [6.0, 7.0, 8.0, 2.0, 3.0, 4.0, 1.0, 5.0], // cmc
            [7.0, 5.0, 6.0, 1.0, 3.0, 2.0, 4.0, 8.0], // dermatology
            [8.0, 5.0, 7.0, 3.0, 2.0, 1.0, 6.0, 4.0], // flag
            [6.0, 5.0, 8.0, 2.0, 3.0, 4.0, 1.0, 7.0], // german
            [5.0, 8.0, 6.0, 4.0, 3.0, 2.0, 1.0, 7.0], // heart
            [5.0, 8.0, 6.0, 1.0, 2.0, 4.0, 3.0, 7.0], // japanese credit
            [3.0, 8.0, 1.0, 2.0, 5.0, 4.0, 6.0, 7.0], // post operative
            [7.0, 8.0, 5.0, 3.0, 4.0, 2.0, 1.0, 6.0], // tae
            [6.0, 1.0, 7.0, 4.0, 2.0, 3.0, 8.0, 5.0], // zoo
        ],
        mean_ranks: [5.455, 6.364, 6.182, 2.455, 3.091, 2.727, 3.545, 6.182],
    },
];

/// Result of one synthetic run: accuracy on the held-out set, final box
/// count, and how often the secondary decision criterion fired (total and
/// correct among fired).
#[derive(Debug, Clone, Copy)]
pub struct SyntheticCell {
    pub accuracy: f64,
    pub boxes: f64,
    pub secondary_total: f64,
    pub secondary_correct: f64,
}

/// Synthetic grid: [theta][dataset][learner][encoder] with datasets
/// synthetic-1 then synthetic-2, learners as in LEARNERS, and encoders as
/// in ENCODER_COLUMNS[1..].
pub const SYNTHETIC: [[[[SyntheticCell; 8]; 3]; 2]; 3] = [
    // theta = 0.1
    [
        // synthetic-1
        [
            [
                SyntheticCell { accuracy: 0.87, boxes: 100.0, secondary_total: 3.0, secondary_correct: 3.0 },
                SyntheticCell { accuracy: 0.854, boxes: 74.0, secondary_total: 6.0, secondary_correct: 3.0 },
                SyntheticCell { accuracy: 0.805, boxes: 74.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.854, boxes: 74.0, secondary_total: 6.0, secondary_correct: 3.0 },
                SyntheticCell { accuracy: 0.854, boxes: 74.0, secondary_total: 6.0, secondary_correct: 3.0 },
                SyntheticCell { accuracy: 0.854, boxes: 74.0, secondary_total: 6.0, secondary_correct: 3.0 },
                SyntheticCell { accuracy: 0.854, boxes: 74.0, secondary_total: 6.0, secondary_correct: 3.0 },
                SyntheticCell { accuracy: 0.854, boxes: 74.0, secondary_total: 6.0, secondary_correct: 3.0 },
            ],
            [
                SyntheticCell { accuracy: 0.86, boxes: 91.0, secondary_total: 4.0, secondary_correct: 2.0 },
                SyntheticCell { accuracy: 0.855, boxes: 74.0, secondary_total: 6.0, secondary_correct: 4.0 },
                SyntheticCell { accuracy: 0.805, boxes: 74.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.855, boxes: 74.0, secondary_total: 6.0, secondary_correct: 4.0 },
                SyntheticCell { accuracy: 0.855, boxes: 74.0, secondary_total: 6.0, secondary_correct: 4.0 },
                SyntheticCell { accuracy: 0.855, boxes: 74.0, secondary_total: 6.0, secondary_correct: 4.0 },
                SyntheticCell { accuracy: 0.855, boxes: 74.0, secondary_total: 6.0, secondary_correct: 4.0 },
                SyntheticCell { accuracy: 0.855, boxes: 74.0, secondary_total: 6.0, secondary_correct: 4.0 },
            ],
            [
                SyntheticCell { accuracy: 0.883, boxes: 101.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.876, boxes: 72.0, secondary_total: 3.0, secondary_correct: 1.0 },
                SyntheticCell { accuracy: 0.806, boxes: 72.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.876, boxes: 72.0, secondary_total: 3.0, secondary_correct: 1.0 },
                SyntheticCell { accuracy: 0.876, boxes: 72.0, secondary_total: 3.0, secondary_correct: 1.0 },
                SyntheticCell { accuracy: 0.876, boxes: 72.0, secondary_total: 3.0, secondary_correct: 1.0 },
                SyntheticCell { accuracy: 0.876, boxes: 72.0, secondary_total: 3.0, secondary_correct: 1.0 },
                SyntheticCell { accuracy: 0.876, boxes: 72.0, secondary_total: 3.0, secondary_correct: 1.0 },
            ],
        ],
        // synthetic-2
        [
            [
                SyntheticCell { accuracy: 0.858, boxes: 112.0, secondary_total: 4.0, secondary_correct: 4.0 },
                SyntheticCell { accuracy: 0.842, boxes: 143.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.829, boxes: 116.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.85, boxes: 143.0, secondary_total: 2.0, secondary_correct: 1.0 },
                SyntheticCell { accuracy: 0.837, boxes: 122.0, secondary_total: 3.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.837, boxes: 122.0, secondary_total: 3.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.842, boxes: 143.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.842, boxes: 143.0, secondary_total: 0.0, secondary_correct: 0.0 },
            ],
            [
                SyntheticCell { accuracy: 0.868, boxes: 110.0, secondary_total: 4.0, secondary_correct: 1.0 },
                SyntheticCell { accuracy: 0.842, boxes: 143.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.84, boxes: 114.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.851, boxes: 143.0, secondary_total: 2.0, secondary_correct: 2.0 },
                SyntheticCell { accuracy: 0.853, boxes: 119.0, secondary_total: 3.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.852, boxes: 119.0, secondary_total: 3.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.842, boxes: 143.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.842, boxes: 143.0, secondary_total: 0.0, secondary_correct: 0.0 },
            ],
            [
                SyntheticCell { accuracy: 0.866, boxes: 116.0, secondary_total: 4.0, secondary_correct: 3.0 },
                SyntheticCell { accuracy: 0.838, boxes: 142.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.833, boxes: 117.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.847, boxes: 142.0, secondary_total: 2.0, secondary_correct: 1.0 },
                SyntheticCell { accuracy: 0.841, boxes: 120.0, secondary_total: 4.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.842, boxes: 120.0, secondary_total: 4.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.838, boxes: 142.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.838, boxes: 142.0, secondary_total: 0.0, secondary_correct: 0.0 },
            ],
        ],
    ],
    // theta = 0.7
    [
        // synthetic-1
        [
            [
                SyntheticCell { accuracy: 0.899, boxes: 38.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.808, boxes: 6.0, secondary_total: 366.0, secondary_correct: 198.0 },
                SyntheticCell { accuracy: 0.726, boxes: 6.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.808, boxes: 6.0, secondary_total: 366.0, secondary_correct: 198.0 },
                SyntheticCell { accuracy: 0.808, boxes: 6.0, secondary_total: 366.0, secondary_correct: 198.0 },
                SyntheticCell { accuracy: 0.808, boxes: 6.0, secondary_total: 366.0, secondary_correct: 198.0 },
                SyntheticCell { accuracy: 0.808, boxes: 6.0, secondary_total: 366.0, secondary_correct: 198.0 },
                SyntheticCell { accuracy: 0.808, boxes: 6.0, secondary_total: 366.0, secondary_correct: 198.0 },
            ],
            [
                SyntheticCell { accuracy: 0.799, boxes: 6.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.868, boxes: 6.0, secondary_total: 366.0, secondary_correct: 258.0 },
                SyntheticCell { accuracy: 0.726, boxes: 6.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.868, boxes: 6.0, secondary_total: 366.0, secondary_correct: 258.0 },
                SyntheticCell { accuracy: 0.868, boxes: 6.0, secondary_total: 366.0, secondary_correct: 258.0 },
                SyntheticCell { accuracy: 0.868, boxes: 6.0, secondary_total: 366.0, secondary_correct: 258.0 },
                SyntheticCell { accuracy: 0.868, boxes: 6.0, secondary_total: 366.0, secondary_correct: 258.0 },
                SyntheticCell { accuracy: 0.868, boxes: 6.0, secondary_total: 366.0, secondary_correct: 258.0 },
            ],
            [
                SyntheticCell { accuracy: 0.899, boxes: 35.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.852, boxes: 6.0, secondary_total: 392.0, secondary_correct: 273.0 },
                SyntheticCell { accuracy: 0.743, boxes: 6.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.852, boxes: 6.0, secondary_total: 392.0, secondary_correct: 273.0 },
                SyntheticCell { accuracy: 0.852, boxes: 6.0, secondary_total: 392.0, secondary_correct: 273.0 },
                SyntheticCell { accuracy: 0.852, boxes: 6.0, secondary_total: 392.0, secondary_correct: 273.0 },
                SyntheticCell { accuracy: 0.852, boxes: 6.0, secondary_total: 392.0, secondary_correct: 273.0 },
                SyntheticCell { accuracy: 0.852, boxes: 6.0, secondary_total: 392.0, secondary_correct: 273.0 },
            ],
        ],
        // synthetic-2
        [
            [
                SyntheticCell { accuracy: 0.861, boxes: 47.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.837, boxes: 20.0, secondary_total: 166.0, secondary_correct: 84.0 },
                SyntheticCell { accuracy: 0.857, boxes: 29.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.899, boxes: 44.0, secondary_total: 11.0, secondary_correct: 8.0 },
                SyntheticCell { accuracy: 0.882, boxes: 30.0, secondary_total: 33.0, secondary_correct: 22.0 },
                SyntheticCell { accuracy: 0.883, boxes: 30.0, secondary_total: 33.0, secondary_correct: 22.0 },
                SyntheticCell { accuracy: 0.837, boxes: 20.0, secondary_total: 166.0, secondary_correct: 84.0 },
                SyntheticCell { accuracy: 0.803, boxes: 7.0, secondary_total: 359.0, secondary_correct: 209.0 },
            ],
            [
                SyntheticCell { accuracy: 0.892, boxes: 6.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.85, boxes: 20.0, secondary_total: 166.0, secondary_correct: 97.0 },
                SyntheticCell { accuracy: 0.888, boxes: 6.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.893, boxes: 5.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.826, boxes: 6.0, secondary_total: 4.0, secondary_correct: 1.0 },
                SyntheticCell { accuracy: 0.826, boxes: 6.0, secondary_total: 4.0, secondary_correct: 1.0 },
                SyntheticCell { accuracy: 0.85, boxes: 20.0, secondary_total: 166.0, secondary_correct: 97.0 },
                SyntheticCell { accuracy: 0.847, boxes: 5.0, secondary_total: 5.0, secondary_correct: 3.0 },
            ],
            [
                SyntheticCell { accuracy: 0.854, boxes: 36.0, secondary_total: 1.0, secondary_correct: 1.0 },
                SyntheticCell { accuracy: 0.837, boxes: 20.0, secondary_total: 166.0, secondary_correct: 84.0 },
                SyntheticCell { accuracy: 0.821, boxes: 28.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.886, boxes: 26.0, secondary_total: 25.0, secondary_correct: 15.0 },
                SyntheticCell { accuracy: 0.865, boxes: 34.0, secondary_total: 14.0, secondary_correct: 10.0 },
                SyntheticCell { accuracy: 0.86, boxes: 33.0, secondary_total: 15.0, secondary_correct: 11.0 },
                SyntheticCell { accuracy: 0.837, boxes: 20.0, secondary_total: 166.0, secondary_correct: 84.0 },
                SyntheticCell { accuracy: 0.862, boxes: 7.0, secondary_total: 407.0, secondary_correct: 312.0 },
            ],
        ],
    ],
    // theta = 1
    [
        // synthetic-1
        [
            [
                SyntheticCell { accuracy: 0.902, boxes: 38.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.829, boxes: 3.0, secondary_total: 485.0, secondary_correct: 330.0 },
                SyntheticCell { accuracy: 0.861, boxes: 8.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.879, boxes: 21.0, secondary_total: 203.0, secondary_correct: 145.0 },
                SyntheticCell { accuracy: 0.886, boxes: 24.0, secondary_total: 284.0, secondary_correct: 223.0 },
                SyntheticCell { accuracy: 0.886, boxes: 24.0, secondary_total: 284.0, secondary_correct: 223.0 },
                SyntheticCell { accuracy: 0.879, boxes: 21.0, secondary_total: 203.0, secondary_correct: 145.0 },
                SyntheticCell { accuracy: 0.886, boxes: 24.0, secondary_total: 284.0, secondary_correct: 223.0 },
            ],
            [
                SyntheticCell { accuracy: 0.892, boxes: 2.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.892, boxes: 2.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.873, boxes: 2.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.892, boxes: 2.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.892, boxes: 2.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.892, boxes: 2.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.892, boxes: 2.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.892, boxes: 2.0, secondary_total: 0.0, secondary_correct: 0.0 },
            ],
            [
                SyntheticCell { accuracy: 0.899, boxes: 35.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.829, boxes: 3.0, secondary_total: 485.0, secondary_correct: 330.0 },
                SyntheticCell { accuracy: 0.726, boxes: 4.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.808, boxes: 4.0, secondary_total: 445.0, secondary_correct: 277.0 },
                SyntheticCell { accuracy: 0.808, boxes: 4.0, secondary_total: 445.0, secondary_correct: 277.0 },
                SyntheticCell { accuracy: 0.808, boxes: 4.0, secondary_total: 445.0, secondary_correct: 277.0 },
                SyntheticCell { accuracy: 0.808, boxes: 4.0, secondary_total: 445.0, secondary_correct: 277.0 },
                SyntheticCell { accuracy: 0.808, boxes: 4.0, secondary_total: 445.0, secondary_correct: 277.0 },
            ],
        ],
        // synthetic-2
        [
            [
                SyntheticCell { accuracy: 0.859, boxes: 45.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.806, boxes: 4.0, secondary_total: 406.0, secondary_correct: 240.0 },
                SyntheticCell { accuracy: 0.849, boxes: 27.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.883, boxes: 43.0, secondary_total: 9.0, secondary_correct: 7.0 },
                SyntheticCell { accuracy: 0.882, boxes: 30.0, secondary_total: 33.0, secondary_correct: 22.0 },
                SyntheticCell { accuracy: 0.883, boxes: 30.0, secondary_total: 33.0, secondary_correct: 22.0 },
                SyntheticCell { accuracy: 0.59, boxes: 5.0, secondary_total: 531.0, secondary_correct: 144.0 },
                SyntheticCell { accuracy: 0.829, boxes: 5.0, secondary_total: 428.0, secondary_correct: 287.0 },
            ],
            [
                SyntheticCell { accuracy: 0.892, boxes: 2.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.892, boxes: 2.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.89, boxes: 2.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.892, boxes: 2.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.892, boxes: 2.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.892, boxes: 2.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.892, boxes: 2.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.892, boxes: 2.0, secondary_total: 0.0, secondary_correct: 0.0 },
            ],
            [
                SyntheticCell { accuracy: 0.854, boxes: 36.0, secondary_total: 1.0, secondary_correct: 1.0 },
                SyntheticCell { accuracy: 0.686, boxes: 4.0, secondary_total: 472.0, secondary_correct: 185.0 },
                SyntheticCell { accuracy: 0.814, boxes: 27.0, secondary_total: 0.0, secondary_correct: 0.0 },
                SyntheticCell { accuracy: 0.885, boxes: 25.0, secondary_total: 25.0, secondary_correct: 15.0 },
                SyntheticCell { accuracy: 0.867, boxes: 33.0, secondary_total: 14.0, secondary_correct: 10.0 },
                SyntheticCell { accuracy: 0.863, boxes: 31.0, secondary_total: 15.0, secondary_correct: 11.0 },
                SyntheticCell { accuracy: 0.79, boxes: 4.0, secondary_total: 487.0, secondary_correct: 304.0 },
                SyntheticCell { accuracy: 0.674, boxes: 6.0, secondary_total: 463.0, secondary_correct: 181.0 },
            ],
        ],
    ],
];

/// Friedman F statistic quoted alongside one family of reference grids.
#[derive(Debug, Clone, Copy)]
pub struct FriedmanRef {
    pub family: &'static str,
    pub theta: f64,
    pub n_datasets: usize,
    pub n_methods: usize,
    pub f_f: f64,
    pub critical: f64,
}

pub const FRIEDMAN_REFS: [FriedmanRef; 12] = [
    FriedmanRef { family: "encoders", theta: 0.1, n_datasets: 14, n_methods: 24, f_f: 3.9637, critical: 1.5655 },
    FriedmanRef { family: "encoders", theta: 0.7, n_datasets: 14, n_methods: 24, f_f: 3.7358, critical: 1.5655 },
    FriedmanRef { family: "encoders", theta: 1.0, n_datasets: 14, n_methods: 24, f_f: 3.6582, critical: 1.5655 },
    FriedmanRef { family: "stacked", theta: 0.1, n_datasets: 11, n_methods: 6, f_f: 2.6222, critical: 2.4004 },
    FriedmanRef { family: "stacked", theta: 0.7, n_datasets: 11, n_methods: 6, f_f: 5.7556, critical: 2.4004 },
    FriedmanRef { family: "stacked", theta: 1.0, n_datasets: 11, n_methods: 6, f_f: 8.1304, critical: 2.4004 },
    FriedmanRef { family: "mixed", theta: 0.1, n_datasets: 14, n_methods: 6, f_f: 1.41975, critical: 2.35603 },
    FriedmanRef { family: "mixed", theta: 0.7, n_datasets: 14, n_methods: 6, f_f: 7.4388, critical: 2.35603 },
    FriedmanRef { family: "mixed", theta: 1.0, n_datasets: 14, n_methods: 6, f_f: 6.29766, critical: 2.35603 },
    FriedmanRef { family: "best-methods", theta: 0.1, n_datasets: 11, n_methods: 8, f_f: 1.061, critical: 2.1435 },
    FriedmanRef { family: "best-methods", theta: 0.7, n_datasets: 11, n_methods: 8, f_f: 2.8616, critical: 2.1435 },
    FriedmanRef { family: "best-methods", theta: 1.0, n_datasets: 11, n_methods: 8, f_f: 9.334, critical: 2.1435 },
];

/// Critical difference for six methods over eleven datasets at alpha 0.05.
pub const STACKED_CD: f64 = 2.2733;
