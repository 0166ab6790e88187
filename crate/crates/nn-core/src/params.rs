use crate::scalar::Scalar;
use crate::tensor::Tensor;

/// A named weight tensor with its accumulated gradient.
#[derive(Clone, Debug)]
pub struct Param<T> {
    pub name: String,
    pub value: Tensor<T>,
    pub grad: Option<Tensor<T>>,
    pub trainable: bool,
}

impl<T: Scalar> Param<T> {
    pub fn new(name: impl Into<String>, value: Tensor<T>) -> Self {
        Self {
            name: name.into(),
            value,
            grad: None,
            trainable: true,
        }
    }

    /// Adds `delta` into the gradient accumulator, allocating it on first use.
    pub fn accumulate_grad(&mut self, delta: &[T]) {
        let grad = self
            .grad
            .get_or_insert_with(|| Tensor::zeros(self.value.shape()));
        for (g, d) in grad.as_mut_slice().iter_mut().zip(delta) {
            *g = *g + *d;
        }
    }
}
