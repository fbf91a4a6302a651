"""Time-series augmentation engine.

Eighteen non-generative augmentation methods (transformation, frequency,
pattern and decomposition based) over a deterministic expansion pipeline,
plus a 1-NN benchmark harness. The heavy lifting lives in the compiled
`_tsaug` extension; this package re-exports its public surface.
"""

from tsaug._tsaug import (  # noqa: F401
    ClassPool,
    Dataset,
    LabeledSeries,
    RandomStream,
    __version__,
    accuracy,
    apply_normalizer,
    dgw,
    dtw,
    dtw_distance,
    dtw_merge,
    emd,
    emd_augment,
    expand,
    fit_normalizer,
    irdft,
    jitter,
    knn1_classify,
    linear_resample,
    list_methods,
    load_ucr_tsv,
    magnitude_warp,
    make_synthetic,
    permutation,
    random_permutation,
    rdft,
    rgw,
    rgws,
    rotation,
    sanitize,
    save_ucr_tsv,
    scaling,
    sfcc,
    shape_dtw,
    smooth_random_curve,
    spawner,
    time_warp,
    wdba,
    window_slice,
    window_warp,
)

__all__ = [name for name in dir() if not name.startswith("_")]
